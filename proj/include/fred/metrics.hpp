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

#include <cstddef>
#include <string>
#include <vector>

#include "fred/anonymizer.hpp"
#include "fred/dataset.hpp"
#include "fred/fuzzy.hpp"

namespace fred {

/// Mean squared elementwise distance between two same-shape tables:
/// (1/m) * sum_ij (a_ij - b_ij)^2, i.e. the trace form of the residual Gram
/// matrix. Zero iff the tables are identical.
struct DissimilarityValue {
  double value = 0.0;
  std::vector<std::string> columns;
  std::size_t m = 0;
};

DissimilarityValue dissimilarity(const Matrix& a, const Matrix& b);

/// Discernibility penalty: a class of size s costs s^2 when s >= k and
/// |D| * s otherwise. Every record carries its class's cost.
struct DiscernibilityCost {
  double total = 0.0;                  // C_DM, summed over classes
  std::vector<double> per_class;       // class order
  std::vector<double> per_record;      // expanded in class order
};

DiscernibilityCost discernibility_cost(const std::vector<std::size_t>& class_sizes,
                                       int k, std::size_t dataset_size);

/// Aggregate utility 1/C_DM plus per-record utilities 1/C_i in row order.
struct UtilityValue {
  double aggregate = 0.0;
  std::vector<double> per_record;
  int k = 0;
  std::size_t dataset_size = 0;
};

UtilityValue utility(const AnonymizedRelease& release);

/// before - after; negative when fusion misleads the adversary.
double information_gain(const DissimilarityValue& before,
                        const DissimilarityValue& after);

enum class ObjectiveMode { Scalar, TraceWeighted };

struct ObjectiveConfig {
  double protection_weight = 0.5;   // W1
  double utility_weight = 0.5;      // W2
  double protection_threshold = 0.0;  // T_p
  double utility_threshold = 0.0;     // T_u
  ObjectiveMode mode = ObjectiveMode::Scalar;
  /// Trace-weighted mode only: per-record diagonal weights. Empty means the
  /// uniform scalar weights above.
  std::vector<double> record_protection_weights;
  std::vector<double> record_utility_weights;

  void validate(std::size_t m = 0) const;
};

/// H = W1 * after + W2 * U.
double objective_scalar(const DissimilarityValue& after, const UtilityValue& u,
                        const ObjectiveConfig& cfg);

/// H = (1/m) Tr(R^T W1 R) + (1/m) Tr(u^T W2 u) over the residual matrix
/// R = P - estimate and the per-record utility column, with diagonal weights.
double objective_trace_weighted(const Matrix& residuals,
                                const std::vector<double>& per_record_utility,
                                const ObjectiveConfig& cfg);

/// Per-level metric bundle.
struct MetricSet {
  int level = 0;
  int k = 0;
  DissimilarityValue before;  // P vs release
  DissimilarityValue after;   // P vs fused estimate, sensitive columns
  double gain = 0.0;
  UtilityValue util;
  double objective = 0.0;
  bool feasible_protection = false;  // after >= T_p
  bool feasible_utility = false;     // U >= T_u
};

/// What "before fusion" compares: the released quasi-identifier distortion
/// (default) or a release-only estimate of the sensitive columns.
enum class BeforeMode { QuasiIdentifierDistortion, ReleaseOnlyEstimate };

/// Precomputed normalized views of the private dataset, reused across levels.
/// All dissimilarities are computed on min-max scaled values when the
/// schema's normalize flag is on, so the two column subsets are commensurate.
class MetricContext {
 public:
  explicit MetricContext(const Dataset& p,
                         BeforeMode mode = BeforeMode::QuasiIdentifierDistortion,
                         const FuzzyInferenceSystem* fis = nullptr);

  MetricSet evaluate(const AnonymizedRelease& release, const Matrix& estimate,
                     const ObjectiveConfig& cfg) const;

  const NormalizationParams& params() const { return params_; }

 private:
  NormalizationParams params_;
  Matrix p_qi_norm_;
  Matrix p_sens_norm_;
  BeforeMode mode_;
  const FuzzyInferenceSystem* fis_;
};

}  // namespace fred
