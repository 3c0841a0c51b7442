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

#include "fred/fred.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace fred {

std::string to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::UtilityBelowThreshold: return "utility-below-threshold";
    case TerminationReason::LevelCap: return "level-cap";
    case TerminationReason::KExceedsM: return "k-exceeds-m";
  }
  return "?";
}

bool is_fusion_resilient(const DissimilarityValue& after, double protection_threshold) {
  return after.value >= protection_threshold;
}

namespace {

// Worker pool over [0, n); serial when `parallel` is off. Results must be
// written by index so both paths produce identical output.
template <typename Fn>
void run_indexed(std::size_t n, bool parallel, Fn&& fn) {
  if (!parallel || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const unsigned worker_count = std::min<unsigned>(
      std::max(1u, std::thread::hardware_concurrency()), static_cast<unsigned>(n));
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (unsigned w = 0; w < worker_count; ++w) {
    workers.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

const CandidateRecord* select_optimal(const std::vector<CandidateRecord>& candidates,
                                      double utility_threshold) {
  const CandidateRecord* best = nullptr;
  for (const CandidateRecord& candidate : candidates) {
    if (candidate.metrics.util.aggregate < utility_threshold) continue;
    if (!best || candidate.metrics.objective > best->metrics.objective) {
      best = &candidate;  // ties keep the earlier, i.e. smaller, level
    }
  }
  return best;
}

FredResult fred_anonymize(const Dataset& p, const Dataset& q,
                          const FuzzyInferenceSystem& fis, const FredConfig& cfg) {
  const std::size_t m = p.row_count();
  cfg.objective.validate(m);
  if (m < 2) throw ValidationError("sweep needs at least 2 records (k starts at 2)");
  if (cfg.level_cap && *cfg.level_cap < 0) throw ValidationError("level cap must be >= 0");
  if (cfg.level_cap && static_cast<std::size_t>(level_to_k(*cfg.level_cap)) > m) {
    throw ValidationError("level cap maps to k exceeding the record count");
  }

  FredResult result;

  // First pass, in level order: build each release and gate on utility, which
  // depends only on the equivalence-class sizes. This fixes the evaluation
  // set before any attack is simulated, so no level past the stop is touched.
  struct LevelState {
    int level;
    std::shared_ptr<const AnonymizedRelease> release;
  };
  std::vector<LevelState> levels;
  for (int level = 0;; ++level) {
    if (static_cast<std::size_t>(level_to_k(level)) > m) {
      result.termination = TerminationReason::KExceedsM;
      break;
    }
    auto release = std::make_shared<const AnonymizedRelease>(basic_anonymization(p, level));
    const UtilityValue u = utility(*release);
    levels.push_back({level, std::move(release)});
    if (u.aggregate < cfg.objective.utility_threshold) {
      result.termination = TerminationReason::UtilityBelowThreshold;
      break;
    }
    if (cfg.level_cap && level >= *cfg.level_cap) {
      result.termination = TerminationReason::LevelCap;
      break;
    }
  }

  // Second pass: simulate the attack and assemble metrics per level. Levels
  // are independent, so this part may run on worker threads; results are
  // stored by index and identical to the serial order.
  const MetricContext context(p, cfg.before_mode, &fis);
  std::vector<MetricSet> sets(levels.size());
  run_indexed(levels.size(), cfg.parallel, [&](std::size_t i) {
    const Matrix estimate = fuse(fis, *levels[i].release, q);
    sets[i] = context.evaluate(*levels[i].release, estimate, cfg.objective);
  });

  result.all_levels = sets;
  result.levels_evaluated = levels.size();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!sets[i].feasible_protection) continue;
    CandidateRecord candidate;
    candidate.candidate_index = static_cast<int>(result.candidates.size());
    candidate.level = levels[i].level;
    candidate.release = levels[i].release;
    candidate.metrics = sets[i];
    result.candidates.push_back(std::move(candidate));
  }
  if (const CandidateRecord* best =
          select_optimal(result.candidates, cfg.objective.utility_threshold)) {
    result.optimum = *best;
  }
  return result;
}

std::vector<MetricSet> evaluate_levels(const Dataset& p, const Dataset& q,
                                       const FuzzyInferenceSystem& fis, int level_lo,
                                       int level_hi, const ObjectiveConfig& objective,
                                       bool parallel, BeforeMode before_mode) {
  objective.validate(p.row_count());
  if (level_lo < 0 || level_hi < level_lo) throw ValidationError("invalid level range");
  if (static_cast<std::size_t>(level_to_k(level_hi)) > p.row_count()) {
    throw ValidationError("k exceeds record count (k=" + std::to_string(level_to_k(level_hi)) +
                          ", m=" + std::to_string(p.row_count()) + ")");
  }

  const MetricContext context(p, before_mode, &fis);
  const std::size_t count = static_cast<std::size_t>(level_hi - level_lo + 1);
  std::vector<MetricSet> sets(count);
  run_indexed(count, parallel, [&](std::size_t i) {
    const int level = level_lo + static_cast<int>(i);
    const AnonymizedRelease release = basic_anonymization(p, level);
    const Matrix estimate = fuse(fis, release, q);
    sets[i] = context.evaluate(release, estimate, objective);
  });
  return sets;
}

}  // namespace fred
