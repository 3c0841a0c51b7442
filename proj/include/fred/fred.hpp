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
#include <memory>
#include <optional>
#include <vector>

#include "fred/anonymizer.hpp"
#include "fred/fuzzy.hpp"
#include "fred/metrics.hpp"

namespace fred {

struct FredConfig {
  ObjectiveConfig objective;
  /// Highest level to evaluate (inclusive). Absent: sweep until k exceeds m.
  std::optional<int> level_cap;
  bool parallel = false;
  BeforeMode before_mode = BeforeMode::QuasiIdentifierDistortion;
};

enum class TerminationReason { UtilityBelowThreshold, LevelCap, KExceedsM };

std::string to_string(TerminationReason reason);

/// A level that passed the protection gate (after >= T_p).
struct CandidateRecord {
  int candidate_index = 0;
  int level = 0;
  std::shared_ptr<const AnonymizedRelease> release;
  MetricSet metrics;
};

struct FredResult {
  std::vector<MetricSet> all_levels;  // every evaluated level, ascending
  std::vector<CandidateRecord> candidates;
  std::optional<CandidateRecord> optimum;
  TerminationReason termination = TerminationReason::KExceedsM;
  std::size_t levels_evaluated = 0;
};

/// True iff the post-attack dissimilarity stays at or above the protection
/// threshold (boundary inclusive).
bool is_fusion_resilient(const DissimilarityValue& after, double protection_threshold);

/// Maximizer of H among candidates with U >= utility_threshold; ties go to
/// the smaller level. Null when no candidate qualifies.
const CandidateRecord* select_optimal(const std::vector<CandidateRecord>& candidates,
                                      double utility_threshold);

/// The level sweep: anonymize at increasing levels, simulate the fusion
/// attack at each, gate candidates on the protection threshold, stop once
/// utility falls below its threshold (that level is still evaluated and
/// reported), and select the feasible level maximizing H. Parallel and
/// serial runs produce identical results.
FredResult fred_anonymize(const Dataset& p, const Dataset& q,
                          const FuzzyInferenceSystem& fis, const FredConfig& cfg);

/// Evaluate an explicit inclusive level range with no termination gating.
/// Backs the plain sweep command.
std::vector<MetricSet> evaluate_levels(const Dataset& p, const Dataset& q,
                                       const FuzzyInferenceSystem& fis, int level_lo,
                                       int level_hi, const ObjectiveConfig& objective,
                                       bool parallel = false,
                                       BeforeMode before_mode = BeforeMode::QuasiIdentifierDistortion);

}  // namespace fred
