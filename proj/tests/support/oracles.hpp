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

// Independent reference computations used by the unit and acceptance suites.
// Everything here sticks to naive formulations on purpose: full matrix
// products, dense-grid quadrature, exhaustive enumeration.

#include <optional>
#include <random>
#include <vector>

#include "fred/fred.hpp"

namespace fred::testing {

/// Mean squared distance via the explicit Gram-matrix route: build
/// R = a - b, form R^T R with a full matrix product, then take the trace.
double trace_dissimilarity_oracle(const Matrix& a, const Matrix& b);

/// Aggregated Mamdani output integrated on a uniform grid with the
/// trapezoidal rule (points + 1 samples).
double grid_centroid_oracle(const FuzzyInferenceSystem& fis, const FuzzyInputs& inputs,
                            int points = 10000);

/// All partitions of {0..m-1} into classes of size k..2k-1 (tiny m only);
/// returns one with minimal within-class squared error.
std::vector<std::vector<std::size_t>> min_sse_partition_oracle(const Matrix& data, int k);

/// From-scratch re-run of the level sweep through the public operations:
/// evaluate levels from 0 until the utility threshold fails or k exceeds m,
/// gate on the protection threshold, then pick the argmax of H by linear
/// scan with the smallest-level tie break.
struct ExhaustiveSweep {
  std::vector<MetricSet> levels;
  std::optional<int> optimal_level;
  double optimal_objective = 0.0;
};

ExhaustiveSweep exhaustive_sweep_oracle(const Dataset& p, const Dataset& q,
                                        const FuzzyInferenceSystem& fis,
                                        const ObjectiveConfig& objective);

/// Random numeric dataset with identifier "r<i>", `cols` quasi-identifier
/// columns and one sensitive column, values in [0, 100].
Dataset random_dataset(std::mt19937& rng, std::size_t rows, std::size_t cols,
                       bool normalize = true);

/// Random single-output system over `input_count` release variables named
/// in0, in1, ... with triangular/trapezoidal terms and a small rule base.
FuzzyInferenceSystem random_fis(std::mt19937& rng, int input_count, int term_count,
                                int rule_count);

/// Random crisp inputs covering the variables of random_fis.
FuzzyInputs random_inputs(std::mt19937& rng, const FuzzyInferenceSystem& fis);

}  // namespace fred::testing
