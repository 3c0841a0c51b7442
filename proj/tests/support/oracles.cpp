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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fred::testing {

double trace_dissimilarity_oracle(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("oracle: shape mismatch");
  Matrix residual = a;
  for (std::size_t i = 0; i < residual.data.size(); ++i) residual.data[i] -= b.data[i];

  // gram = residual^T residual, computed as a full product
  std::vector<std::vector<double>> gram(residual.cols, std::vector<double>(residual.cols, 0.0));
  for (std::size_t i = 0; i < residual.cols; ++i) {
    for (std::size_t j = 0; j < residual.cols; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < residual.rows; ++r) {
        acc += residual.at(r, i) * residual.at(r, j);
      }
      gram[i][j] = acc;
    }
  }
  double trace = 0.0;
  for (std::size_t i = 0; i < residual.cols; ++i) trace += gram[i][i];
  return trace / static_cast<double>(residual.rows);
}

double grid_centroid_oracle(const FuzzyInferenceSystem& fis, const FuzzyInputs& inputs,
                            int points) {
  const FuzzyVariable& out = fis.output();

  std::vector<std::pair<const MembershipFunction*, double>> fired;
  for (const FuzzyRule& rule : fis.rules()) {
    const double strength = evaluate_rule(fis, rule, inputs);
    if (strength > 0.0) fired.emplace_back(&out.terms.at(rule.consequent_term), strength);
  }
  if (fired.empty()) return out.universe.midpoint();

  auto aggregated = [&](double y) {
    double best = 0.0;
    for (const auto& [mf, strength] : fired) {
      best = std::max(best, std::min(strength, mf->degree(y)));
    }
    return best;
  };

  const double lo = out.universe.lo;
  const double hi = out.universe.hi;
  const double step = (hi - lo) / points;
  double area = 0.0;
  double moment = 0.0;
  double prev_y = aggregated(lo);
  double prev_x = lo;
  for (int i = 1; i <= points; ++i) {
    const double x = lo + step * i;
    const double y = aggregated(x);
    area += 0.5 * step * (prev_y + y);
    moment += 0.5 * step * (prev_x * prev_y + x * y);
    prev_x = x;
    prev_y = y;
  }
  if (area <= 0.0) return out.universe.midpoint();
  return moment / area;
}

namespace {

void enumerate_partitions(std::vector<std::size_t> unassigned, int k,
                          std::vector<std::vector<std::size_t>>& current,
                          std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (unassigned.empty()) {
    out.push_back(current);
    return;
  }
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t anchor = unassigned.front();
  // choose the class containing the smallest unassigned index
  for (std::size_t size = kk; size <= 2 * kk - 1 && size <= unassigned.size(); ++size) {
    std::vector<bool> pick(unassigned.size() - 1, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size - 1), true);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<std::size_t> members{anchor};
      std::vector<std::size_t> rest;
      for (std::size_t i = 1; i < unassigned.size(); ++i) {
        if (pick[i - 1]) members.push_back(unassigned[i]);
        else rest.push_back(unassigned[i]);
      }
      current.push_back(members);
      enumerate_partitions(rest, k, current, out);
      current.pop_back();
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
}

double partition_sse(const Matrix& data, const std::vector<std::vector<std::size_t>>& classes) {
  double sse = 0.0;
  for (const auto& members : classes) {
    std::vector<double> mean(data.cols, 0.0);
    for (std::size_t r : members) {
      for (std::size_t c = 0; c < data.cols; ++c) mean[c] += data.at(r, c);
    }
    for (double& v : mean) v /= static_cast<double>(members.size());
    for (std::size_t r : members) {
      for (std::size_t c = 0; c < data.cols; ++c) {
        const double diff = data.at(r, c) - mean[c];
        sse += diff * diff;
      }
    }
  }
  return sse;
}

}  // namespace

std::vector<std::vector<std::size_t>> min_sse_partition_oracle(const Matrix& data, int k) {
  if (data.rows > 10) throw std::invalid_argument("oracle: enumeration limited to m <= 10");
  std::vector<std::size_t> all(data.rows);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<std::vector<std::vector<std::size_t>>> partitions;
  std::vector<std::vector<std::size_t>> current;
  enumerate_partitions(all, k, current, partitions);
  if (partitions.empty()) throw std::invalid_argument("oracle: no feasible partition");

  std::size_t best = 0;
  double best_sse = partition_sse(data, partitions[0]);
  for (std::size_t i = 1; i < partitions.size(); ++i) {
    const double sse = partition_sse(data, partitions[i]);
    if (sse < best_sse) {
      best = i;
      best_sse = sse;
    }
  }
  return partitions[best];
}

ExhaustiveSweep exhaustive_sweep_oracle(const Dataset& p, const Dataset& q,
                                        const FuzzyInferenceSystem& fis,
                                        const ObjectiveConfig& objective) {
  ExhaustiveSweep sweep;
  const MetricContext context(p);
  for (int level = 0;; ++level) {
    if (static_cast<std::size_t>(level_to_k(level)) > p.row_count()) break;
    const AnonymizedRelease release = basic_anonymization(p, level);
    const Matrix estimate = fuse(fis, release, q);
    const MetricSet ms = context.evaluate(release, estimate, objective);
    sweep.levels.push_back(ms);
    if (ms.util.aggregate < objective.utility_threshold) break;
  }
  for (const MetricSet& ms : sweep.levels) {
    if (ms.after.value < objective.protection_threshold) continue;
    if (ms.util.aggregate < objective.utility_threshold) continue;
    if (!sweep.optimal_level || ms.objective > sweep.optimal_objective) {
      sweep.optimal_level = ms.level;
      sweep.optimal_objective = ms.objective;
    }
  }
  return sweep;
}

Dataset random_dataset(std::mt19937& rng, std::size_t rows, std::size_t cols, bool normalize) {
  std::uniform_real_distribution<double> value(0.0, 100.0);

  std::vector<Column> columns;
  columns.push_back({"id", Role::Identifier, Kind::Categorical, std::nullopt, {}});
  for (std::size_t c = 0; c < cols; ++c) {
    columns.push_back({"q" + std::to_string(c), Role::QuasiIdentifier, Kind::Numeric,
                       std::nullopt, {}});
  }
  columns.push_back({"s", Role::Sensitive, Kind::Numeric, std::nullopt, {}});
  AttributeSchema schema(std::move(columns), normalize);

  std::vector<std::vector<Cell>> data;
  data.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Cell> row;
    row.emplace_back("r" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) row.emplace_back(value(rng));
    row.emplace_back(value(rng));
    data.push_back(std::move(row));
  }
  return Dataset(std::move(schema), std::move(data));
}

FuzzyInferenceSystem random_fis(std::mt19937& rng, int input_count, int term_count,
                                int rule_count) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);

  auto make_terms = [&](double lo, double hi) {
    std::map<std::string, MembershipFunction> terms;
    for (int t = 0; t < term_count; ++t) {
      double p[4];
      for (double& v : p) v = lo + (hi - lo) * unit(rng);
      std::sort(std::begin(p), std::end(p));
      if (coin(rng) && p[0] < p[1]) {
        terms["t" + std::to_string(t)] =
            MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]);
      } else if (p[0] < p[2]) {
        terms["t" + std::to_string(t)] = MembershipFunction::triangular(p[0], p[1], p[2]);
      } else {
        terms["t" + std::to_string(t)] =
            MembershipFunction::triangular(lo, 0.5 * (lo + hi), hi);
      }
    }
    return terms;
  };

  std::vector<FuzzyVariable> variables;
  for (int i = 0; i < input_count; ++i) {
    FuzzyVariable var;
    var.name = "in" + std::to_string(i);
    var.source = VariableSource::Release;
    var.universe = {0.0, 10.0};
    var.terms = make_terms(0.0, 10.0);
    variables.push_back(std::move(var));
  }
  FuzzyVariable out;
  out.name = "out";
  out.source = VariableSource::Output;
  out.universe = {0.0, 1000.0};
  out.terms = make_terms(0.0, 1000.0);
  variables.push_back(std::move(out));

  std::uniform_int_distribution<int> pick_input(0, input_count - 1);
  std::uniform_int_distribution<int> pick_term(0, term_count - 1);
  std::uniform_int_distribution<int> pick_len(1, std::max(1, input_count));
  std::vector<FuzzyRule> rules;
  for (int r = 0; r < rule_count; ++r) {
    FuzzyRule rule;
    const int len = pick_len(rng);
    for (int c = 0; c < len; ++c) {
      rule.antecedent.emplace_back("in" + std::to_string(pick_input(rng)),
                                   "t" + std::to_string(pick_term(rng)));
    }
    rule.connective = coin(rng) ? FuzzyRule::Connective::AndMin : FuzzyRule::Connective::OrMax;
    rule.consequent_term = "t" + std::to_string(pick_term(rng));
    rule.weight = unit(rng);
    rules.push_back(std::move(rule));
  }
  return FuzzyInferenceSystem(std::move(variables), std::move(rules));
}

FuzzyInputs random_inputs(std::mt19937& rng, const FuzzyInferenceSystem& fis) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FuzzyInputs inputs;
  for (const FuzzyVariable& var : fis.variables()) {
    if (var.source == VariableSource::Output) continue;
    inputs[var.name] = var.universe.lo + (var.universe.hi - var.universe.lo) * unit(rng);
  }
  return inputs;
}

}  // namespace fred::testing
