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

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fred/anonymizer.hpp"
#include "fred/dataset.hpp"

namespace fred {

struct MembershipFunction {
  enum class Shape { Triangular, Trapezoidal };

  Shape shape = Shape::Triangular;
  double a = 0, b = 0, c = 0, d = 0;  // d unused for triangles

  static MembershipFunction triangular(double a, double b, double c);
  static MembershipFunction trapezoidal(double a, double b, double c, double d);

  /// Piecewise-linear membership degree in [0, 1]; zero outside the support.
  double degree(double x) const;

  double support_lo() const { return a; }
  double support_hi() const { return shape == Shape::Triangular ? c : d; }
};

/// Alias matching the usual vocabulary; identical to f.degree(x).
double fuzzify(double x, const MembershipFunction& f);

enum class VariableSource { Release, Auxiliary, Output };

struct FuzzyVariable {
  std::string name;
  VariableSource source = VariableSource::Release;
  Interval universe;
  std::map<std::string, MembershipFunction> terms;
};

struct FuzzyRule {
  enum class Connective { AndMin, OrMax };

  std::vector<std::pair<std::string, std::string>> antecedent;  // (variable, term)
  Connective connective = Connective::AndMin;
  std::string consequent_term;  // term of the output variable
  double weight = 1.0;
};

/// Immutable Mamdani rule system: declared variables with membership terms,
/// a weighted rule base, centroid defuzzification. Exactly one variable is
/// the output.
class FuzzyInferenceSystem {
 public:
  FuzzyInferenceSystem(std::vector<FuzzyVariable> variables,
                       std::vector<FuzzyRule> rules);

  const std::vector<FuzzyVariable>& variables() const { return variables_; }
  const std::vector<FuzzyRule>& rules() const { return rules_; }
  const FuzzyVariable& output() const { return variables_[output_index_]; }
  const FuzzyVariable* find_variable(const std::string& name) const;
  const FuzzyVariable& variable(const std::string& name) const;

 private:
  std::vector<FuzzyVariable> variables_;
  std::vector<FuzzyRule> rules_;
  std::size_t output_index_ = 0;
};

/// Parse and validate a rule-system file against the schema: release-sourced
/// variables must name quasi-identifier columns, auxiliary-sourced ones
/// auxiliary columns, and the output a sensitive column.
FuzzyInferenceSystem parse_fis(const std::string& path, const AttributeSchema& schema);
FuzzyInferenceSystem parse_fis_text(const std::string& text, const AttributeSchema& schema);

using FuzzyInputs = std::map<std::string, double>;

/// weight x (min over conjunct degrees | max for OR); 0 when any referenced
/// variable is absent from the inputs.
double evaluate_rule(const FuzzyInferenceSystem& fis, const FuzzyRule& rule,
                     const FuzzyInputs& inputs);

/// Mamdani pipeline: clip each fired consequent at the rule strength,
/// aggregate by pointwise max, defuzzify by exact centroid of the
/// piecewise-linear aggregate. Returns the output-universe midpoint when no
/// rule fires.
double infer_record(const FuzzyInferenceSystem& fis, const FuzzyInputs& inputs);

/// Estimate the sensitive attribute for every release row by fusing the
/// released values with the auxiliary rows joined on identifier. Rules
/// touching auxiliary attributes of unmatched rows are disabled, not imputed.
Matrix fuse(const FuzzyInferenceSystem& fis, const AnonymizedRelease& release,
            const Dataset& aux);

/// Release-only adversary: every auxiliary-sourced variable is absent.
Matrix fuse(const FuzzyInferenceSystem& fis, const AnonymizedRelease& release);

}  // namespace fred
