// Copyright 2026 The FRED Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fred/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fred/csv.hpp"
#include "json.hpp"

namespace fred {

MembershipFunction MembershipFunction::triangular(double a, double b, double c) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
    throw ValidationError("triangular membership: non-finite parameter");
  }
  if (!(a <= b && b <= c)) {
    throw ValidationError("triangular membership: requires a <= b <= c");
  }
  if (a == c) throw ValidationError("triangular membership: degenerate (a == b == c)");
  MembershipFunction f;
  f.shape = Shape::Triangular;
  f.a = a;
  f.b = b;
  f.c = c;
  return f;
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b, double c, double d) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
    throw ValidationError("trapezoidal membership: non-finite parameter");
  }
  if (!(a <= b && b <= c && c <= d)) {
    throw ValidationError("trapezoidal membership: requires a <= b <= c <= d");
  }
  if (!(b < c || a < b)) {
    throw ValidationError("trapezoidal membership: degenerate (use a triangle instead)");
  }
  MembershipFunction f;
  f.shape = Shape::Trapezoidal;
  f.a = a;
  f.b = b;
  f.c = c;
  f.d = d;
  return f;
}

double MembershipFunction::degree(double x) const {
  if (shape == Shape::Triangular) {
    if (x < a || x > c) return 0.0;
    if (x < b) return b == a ? 1.0 : (x - a) / (b - a);
    return c == b ? 1.0 : (c - x) / (c - b);
  }
  if (x < a || x > d) return 0.0;
  if (x < b) return b == a ? 1.0 : (x - a) / (b - a);
  if (x <= c) return 1.0;
  return d == c ? 1.0 : (d - x) / (d - c);
}

double fuzzify(double x, const MembershipFunction& f) { return f.degree(x); }

FuzzyInferenceSystem::FuzzyInferenceSystem(std::vector<FuzzyVariable> variables,
                                           std::vector<FuzzyRule> rules)
    : variables_(std::move(variables)), rules_(std::move(rules)) {
  if (variables_.empty()) throw ValidationError("fuzzy system declares no variables");
  if (rules_.empty()) throw ValidationError("fuzzy system has an empty rule base");

  std::size_t output_count = 0;
  std::set<std::string> names;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const FuzzyVariable& var = variables_[i];
    if (!names.insert(var.name).second) {
      throw ValidationError("duplicate fuzzy variable '" + var.name + "'");
    }
    if (!(var.universe.lo < var.universe.hi)) {
      throw ValidationError("variable '" + var.name + "': universe must satisfy lo < hi");
    }
    if (var.terms.empty()) {
      throw ValidationError("variable '" + var.name + "' declares no terms");
    }
    for (const auto& [label, mf] : var.terms) {
      if (mf.support_lo() < var.universe.lo || mf.support_hi() > var.universe.hi) {
        throw ValidationError("variable '" + var.name + "', term '" + label +
                              "': support outside the universe");
      }
    }
    if (var.source == VariableSource::Output) {
      output_count++;
      output_index_ = i;
    }
  }
  if (output_count != 1) {
    throw ValidationError("fuzzy system must declare exactly one output variable, got " +
                          std::to_string(output_count));
  }

  const FuzzyVariable& out = variables_[output_index_];
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const FuzzyRule& rule = rules_[i];
    const std::string where = "rule " + std::to_string(i + 1);
    if (rule.antecedent.empty()) throw ValidationError(where + ": empty antecedent");
    if (!(rule.weight >= 0.0 && rule.weight <= 1.0)) {
      throw ValidationError(where + ": weight must lie in [0, 1]");
    }
    for (const auto& [var_name, term] : rule.antecedent) {
      const FuzzyVariable* var = find_variable(var_name);
      if (!var) throw ValidationError(where + ": unknown variable '" + var_name + "'");
      if (var->source == VariableSource::Output) {
        throw ValidationError(where + ": output variable '" + var_name + "' used as input");
      }
      if (!var->terms.count(term)) {
        throw ValidationError(where + ": variable '" + var_name + "' has no term '" + term + "'");
      }
    }
    if (!out.terms.count(rule.consequent_term)) {
      throw ValidationError(where + ": output has no term '" + rule.consequent_term + "'");
    }
  }
}

const FuzzyVariable* FuzzyInferenceSystem::find_variable(const std::string& name) const {
  for (const FuzzyVariable& var : variables_) {
    if (var.name == name) return &var;
  }
  return nullptr;
}

const FuzzyVariable& FuzzyInferenceSystem::variable(const std::string& name) const {
  const FuzzyVariable* var = find_variable(name);
  if (!var) throw ValidationError("unknown fuzzy variable '" + name + "'");
  return *var;
}

// --- parsing -----------------------------------------------------------------

namespace {

using nlohmann::json;

VariableSource parse_source(const std::string& text) {
  if (text == "release") return VariableSource::Release;
  if (text == "auxiliary") return VariableSource::Auxiliary;
  if (text == "output") return VariableSource::Output;
  throw ValidationError("unknown variable source '" + text + "'");
}

MembershipFunction mf_from_json(const json& node, const std::string& where) {
  const std::string shape = node.at("shape").get<std::string>();
  const json& params = node.at("params");
  if (shape == "triangular") {
    if (!params.is_array() || params.size() != 3) {
      throw ValidationError(where + ": triangular shape takes params [a, b, c]");
    }
    return MembershipFunction::triangular(params[0].get<double>(), params[1].get<double>(),
                                          params[2].get<double>());
  }
  if (shape == "trapezoidal") {
    if (!params.is_array() || params.size() != 4) {
      throw ValidationError(where + ": trapezoidal shape takes params [a, b, c, d]");
    }
    return MembershipFunction::trapezoidal(params[0].get<double>(), params[1].get<double>(),
                                           params[2].get<double>(), params[3].get<double>());
  }
  throw ValidationError(where + ": unknown membership shape '" + shape + "'");
}

void check_against_schema(const FuzzyVariable& var, const AttributeSchema& schema) {
  const Column* col = schema.find(var.name);
  if (!col) {
    throw ValidationError("fuzzy variable '" + var.name + "' names no schema column");
  }
  switch (var.source) {
    case VariableSource::Release:
      if (col->role != Role::QuasiIdentifier) {
        throw ValidationError("release-sourced variable '" + var.name +
                              "' must name a quasi-identifier column");
      }
      break;
    case VariableSource::Auxiliary:
      if (col->role != Role::Auxiliary) {
        throw ValidationError("auxiliary-sourced variable '" + var.name +
                              "' must name an auxiliary column");
      }
      break;
    case VariableSource::Output:
      if (col->role != Role::Sensitive) {
        throw ValidationError("output variable '" + var.name +
                              "' must name a sensitive column");
      }
      break;
  }
  if (col->kind == Kind::Categorical && !col->has_category_map()) {
    throw ValidationError("fuzzy variable '" + var.name +
                          "' reads a categorical column without a category map");
  }
}

}  // namespace

FuzzyInferenceSystem parse_fis_text(const std::string& text, const AttributeSchema& schema) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("fuzzy system JSON parse error: ") + e.what());
  }

  try {
    std::vector<FuzzyVariable> variables;
    for (const json& node : doc.at("variables")) {
      FuzzyVariable var;
      var.name = node.at("name").get<std::string>();
      var.source = parse_source(node.at("source").get<std::string>());
      const json& u = node.at("universe");
      if (!u.is_array() || u.size() != 2) {
        throw ValidationError("variable '" + var.name + "': universe must be [lo, hi]");
      }
      var.universe = Interval{u[0].get<double>(), u[1].get<double>()};
      for (const auto& [label, mf_node] : node.at("terms").items()) {
        var.terms[label] = mf_from_json(mf_node, "variable '" + var.name + "', term '" + label + "'");
      }
      check_against_schema(var, schema);
      variables.push_back(std::move(var));
    }

    std::vector<FuzzyRule> rules;
    for (const json& node : doc.at("rules")) {
      FuzzyRule rule;
      for (const json& conjunct : node.at("if")) {
        if (!conjunct.is_array() || conjunct.size() != 2) {
          throw ValidationError("rule antecedents must be [variable, term] pairs");
        }
        rule.antecedent.emplace_back(conjunct[0].get<std::string>(),
                                     conjunct[1].get<std::string>());
      }
      const std::string connective = node.value("connective", "and");
      if (connective == "and") rule.connective = FuzzyRule::Connective::AndMin;
      else if (connective == "or") rule.connective = FuzzyRule::Connective::OrMax;
      else throw ValidationError("unknown rule connective '" + connective + "'");
      rule.consequent_term = node.at("then").get<std::string>();
      rule.weight = node.value("weight", 1.0);
      rules.push_back(std::move(rule));
    }
    return FuzzyInferenceSystem(std::move(variables), std::move(rules));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("fuzzy system JSON: ") + e.what());
  }
}

FuzzyInferenceSystem parse_fis(const std::string& path, const AttributeSchema& schema) {
  return parse_fis_text(csv::read_file(path), schema);
}

// --- inference ----------------------------------------------------------------

double evaluate_rule(const FuzzyInferenceSystem& fis, const FuzzyRule& rule,
                     const FuzzyInputs& inputs) {
  const bool conjunctive = rule.connective == FuzzyRule::Connective::AndMin;
  double strength = conjunctive ? 1.0 : 0.0;
  for (const auto& [var_name, term] : rule.antecedent) {
    auto it = inputs.find(var_name);
    if (it == inputs.end()) return 0.0;  // missing data disables the rule
    const double deg = fis.variable(var_name).terms.at(term).degree(it->second);
    strength = conjunctive ? std::min(strength, deg) : std::max(strength, deg);
  }
  return rule.weight * strength;
}

namespace {

struct ClippedTerm {
  const MembershipFunction* mf;
  double level;

  double value(double x) const { return std::min(level, mf->degree(x)); }
};

// x positions where the clip level crosses the membership edges; these are
// the only points besides the shape corners where the clipped set bends.
void add_clip_breakpoints(const ClippedTerm& term, std::vector<double>& xs) {
  const MembershipFunction& mf = *term.mf;
  const double level = term.level;
  if (level <= 0.0 || level >= 1.0) return;
  if (mf.b > mf.a) xs.push_back(mf.a + level * (mf.b - mf.a));
  if (mf.shape == MembershipFunction::Shape::Triangular) {
    if (mf.c > mf.b) xs.push_back(mf.c - level * (mf.c - mf.b));
  } else {
    if (mf.d > mf.c) xs.push_back(mf.d - level * (mf.d - mf.c));
  }
}

// Exact centroid of max over clipped piecewise-linear sets on [lo, hi].
// Breakpoints are collected so that every refined interval holds one linear
// governing segment; area and first moment then integrate in closed form.
double aggregate_centroid(const std::vector<ClippedTerm>& terms, double lo, double hi) {
  std::vector<double> xs{lo, hi};
  for (const ClippedTerm& term : terms) {
    const MembershipFunction& mf = *term.mf;
    xs.push_back(mf.a);
    xs.push_back(mf.b);
    xs.push_back(mf.c);
    if (mf.shape == MembershipFunction::Shape::Trapezoidal) xs.push_back(mf.d);
    add_clip_breakpoints(term, xs);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  xs.erase(std::remove_if(xs.begin(), xs.end(), [&](double x) { return x < lo || x > hi; }),
           xs.end());

  // Within each interval every clipped term is linear; add pairwise segment
  // crossings so the upper envelope is linear on each refined piece.
  std::vector<double> refined = xs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double x0 = xs[i];
    const double x1 = xs[i + 1];
    if (!(x1 > x0)) continue;
    for (std::size_t s = 0; s < terms.size(); ++s) {
      const double s0 = terms[s].value(x0);
      const double s1 = terms[s].value(x1);
      for (std::size_t t = s + 1; t < terms.size(); ++t) {
        const double t0 = terms[t].value(x0);
        const double t1 = terms[t].value(x1);
        const double denom = (s1 - s0) - (t1 - t0);
        if (denom == 0.0) continue;
        const double u = (t0 - s0) / denom;
        if (u > 0.0 && u < 1.0) refined.push_back(x0 + u * (x1 - x0));
      }
    }
  }
  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());

  auto envelope = [&](double x) {
    double best = 0.0;
    for (const ClippedTerm& term : terms) best = std::max(best, term.value(x));
    return best;
  };

  double area = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i + 1 < refined.size(); ++i) {
    const double x0 = refined[i];
    const double x1 = refined[i + 1];
    const double h = x1 - x0;
    if (!(h > 0.0)) continue;
    const double y0 = envelope(x0);
    const double y1 = envelope(x1);
    area += 0.5 * h * (y0 + y1);
    // integral of x * y(x) with y linear from (x0, y0) to (x1, y1)
    moment += h * (x0 * y0 + 0.5 * (x0 * (y1 - y0) + h * y0) + h * (y1 - y0) / 3.0);
  }
  if (area <= 0.0) return 0.5 * (lo + hi);
  return moment / area;
}

}  // namespace

double infer_record(const FuzzyInferenceSystem& fis, const FuzzyInputs& inputs) {
  const FuzzyVariable& out = fis.output();
  std::vector<ClippedTerm> fired;
  for (const FuzzyRule& rule : fis.rules()) {
    const double strength = evaluate_rule(fis, rule, inputs);
    if (strength > 0.0) fired.push_back({&out.terms.at(rule.consequent_term), strength});
  }
  if (fired.empty()) return out.universe.midpoint();
  return aggregate_centroid(fired, out.universe.lo, out.universe.hi);
}

namespace {

Matrix fuse_joined(const FuzzyInferenceSystem& fis, const AnonymizedRelease& release,
                   const Dataset* aux) {
  const Dataset& published = release.dataset;

  // Resolve each input variable against its source once.
  struct Binding {
    const FuzzyVariable* var;
    std::size_t column;
    bool from_aux;
  };
  std::vector<Binding> bindings;
  for (const FuzzyVariable& var : fis.variables()) {
    if (var.source == VariableSource::Output) continue;
    if (var.source == VariableSource::Release) {
      const Column* col = published.schema().find(var.name);
      if (!col) {
        throw ValidationError("fuzzy variable '" + var.name +
                              "' is unresolvable against the release");
      }
      bindings.push_back({&var, published.schema().index_of(var.name), false});
    } else {
      if (!aux) continue;  // release-only adversary: auxiliary inputs absent
      const Column* col = aux->schema().find(var.name);
      if (!col) {
        throw ValidationError("fuzzy variable '" + var.name +
                              "' is unresolvable against the auxiliary data");
      }
      bindings.push_back({&var, aux->schema().index_of(var.name), true});
    }
  }

  JoinedView joined;
  if (aux) joined = join_on_identifier(published, *aux);

  Matrix estimates = Matrix::zeros(published.row_count(), 1);
  estimates.column_names.push_back(fis.output().name);
  for (std::size_t r = 0; r < published.row_count(); ++r) {
    FuzzyInputs inputs;
    std::optional<std::size_t> aux_row;
    if (aux) aux_row = joined.pairs[r].second;
    for (const Binding& binding : bindings) {
      if (binding.from_aux) {
        if (aux_row) inputs[binding.var->name] = aux->numeric_cell(*aux_row, binding.column);
      } else {
        inputs[binding.var->name] = published.numeric_cell(r, binding.column);
      }
    }
    estimates.at(r, 0) = infer_record(fis, inputs);
  }
  return estimates;
}

}  // namespace

Matrix fuse(const FuzzyInferenceSystem& fis, const AnonymizedRelease& release,
            const Dataset& aux) {
  return fuse_joined(fis, release, &aux);
}

Matrix fuse(const FuzzyInferenceSystem& fis, const AnonymizedRelease& release) {
  return fuse_joined(fis, release, nullptr);
}

}  // namespace fred
