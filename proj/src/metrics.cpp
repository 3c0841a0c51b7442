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

#include "fred/metrics.hpp"

#include <cmath>
#include <numeric>

namespace fred {

DissimilarityValue dissimilarity(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) {
    throw ValidationError("dissimilarity: shape mismatch (" + std::to_string(a.rows) + "x" +
                          std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                          std::to_string(b.cols) + ")");
  }
  if (a.rows == 0) throw ValidationError("dissimilarity: empty matrices");
  for (double v : a.data) {
    if (!std::isfinite(v)) throw ValidationError("dissimilarity: non-finite entry");
  }
  for (double v : b.data) {
    if (!std::isfinite(v)) throw ValidationError("dissimilarity: non-finite entry");
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double diff = a.data[i] - b.data[i];
    acc += diff * diff;
  }
  DissimilarityValue out;
  out.value = acc / static_cast<double>(a.rows);
  out.columns = a.column_names;
  out.m = a.rows;
  return out;
}

DiscernibilityCost discernibility_cost(const std::vector<std::size_t>& class_sizes,
                                       int k, std::size_t dataset_size) {
  if (k < 2) throw ValidationError("discernibility: k must be >= 2");
  std::size_t covered = std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
  if (covered != dataset_size) {
    throw ValidationError("discernibility: class sizes sum to " + std::to_string(covered) +
                          ", dataset has " + std::to_string(dataset_size));
  }

  DiscernibilityCost cost;
  cost.per_class.reserve(class_sizes.size());
  cost.per_record.reserve(dataset_size);
  for (std::size_t size : class_sizes) {
    const double s = static_cast<double>(size);
    const double class_cost = size >= static_cast<std::size_t>(k)
                                  ? s * s
                                  : static_cast<double>(dataset_size) * s;
    cost.per_class.push_back(class_cost);
    cost.total += class_cost;
    for (std::size_t i = 0; i < size; ++i) cost.per_record.push_back(class_cost);
  }
  return cost;
}

UtilityValue utility(const AnonymizedRelease& release) {
  const std::size_t m = release.dataset.row_count();
  const DiscernibilityCost cost =
      discernibility_cost(equivalence_class_sizes(release), release.k, m);

  UtilityValue u;
  u.aggregate = 1.0 / cost.total;
  u.k = release.k;
  u.dataset_size = m;
  u.per_record.assign(m, 0.0);
  for (std::size_t g = 0; g < release.partition.classes.size(); ++g) {
    for (std::size_t r : release.partition.classes[g]) {
      u.per_record[r] = 1.0 / cost.per_class[g];
    }
  }
  return u;
}

double information_gain(const DissimilarityValue& before, const DissimilarityValue& after) {
  return before.value - after.value;
}

void ObjectiveConfig::validate(std::size_t m) const {
  if (!(protection_weight >= 0.0) || !(utility_weight >= 0.0)) {
    throw ValidationError("objective weights must be non-negative");
  }
  if (protection_weight + utility_weight <= 0.0) {
    throw ValidationError("objective weights must not both be zero");
  }
  if (!std::isfinite(protection_threshold) || !std::isfinite(utility_threshold)) {
    throw ValidationError("thresholds must be finite");
  }
  if (mode == ObjectiveMode::TraceWeighted && m > 0) {
    if (!record_protection_weights.empty() && record_protection_weights.size() != m) {
      throw ValidationError("per-record protection weights must have one entry per record");
    }
    if (!record_utility_weights.empty() && record_utility_weights.size() != m) {
      throw ValidationError("per-record utility weights must have one entry per record");
    }
  }
}

double objective_scalar(const DissimilarityValue& after, const UtilityValue& u,
                        const ObjectiveConfig& cfg) {
  return cfg.protection_weight * after.value + cfg.utility_weight * u.aggregate;
}

double objective_trace_weighted(const Matrix& residuals,
                                const std::vector<double>& per_record_utility,
                                const ObjectiveConfig& cfg) {
  const std::size_t m = residuals.rows;
  if (m == 0) throw ValidationError("trace objective: empty residual matrix");
  if (per_record_utility.size() != m) {
    throw ValidationError("trace objective: utility column must have one entry per record");
  }
  if (!cfg.record_protection_weights.empty() && cfg.record_protection_weights.size() != m) {
    throw ValidationError("trace objective: non-conformable protection weights");
  }
  if (!cfg.record_utility_weights.empty() && cfg.record_utility_weights.size() != m) {
    throw ValidationError("trace objective: non-conformable utility weights");
  }

  auto w1 = [&](std::size_t r) {
    return cfg.record_protection_weights.empty() ? cfg.protection_weight
                                                 : cfg.record_protection_weights[r];
  };
  auto w2 = [&](std::size_t r) {
    return cfg.record_utility_weights.empty() ? cfg.utility_weight
                                              : cfg.record_utility_weights[r];
  };

  double protection = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < residuals.cols; ++c) {
      const double v = residuals.at(r, c);
      row += v * v;
    }
    protection += w1(r) * row;
  }
  double util = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    util += w2(r) * per_record_utility[r] * per_record_utility[r];
  }
  return (protection + util) / static_cast<double>(m);
}

MetricContext::MetricContext(const Dataset& p, BeforeMode mode,
                             const FuzzyInferenceSystem* fis)
    : mode_(mode), fis_(fis) {
  if (mode_ == BeforeMode::ReleaseOnlyEstimate && !fis_) {
    throw ValidationError("release-only before mode needs a fuzzy system");
  }
  if (p.schema().normalize()) params_ = NormalizationParams::fit(p);
  p_qi_norm_ = params_.scale_matrix(numeric_view(p, {Role::QuasiIdentifier}));
  p_sens_norm_ = params_.scale_matrix(numeric_view(p, {Role::Sensitive}));
}

MetricSet MetricContext::evaluate(const AnonymizedRelease& release, const Matrix& estimate,
                                  const ObjectiveConfig& cfg) const {
  MetricSet ms;
  ms.level = release.level;
  ms.k = release.k;

  if (mode_ == BeforeMode::QuasiIdentifierDistortion) {
    const Matrix released_qi = numeric_view(release.dataset, {Role::QuasiIdentifier});
    ms.before = dissimilarity(p_qi_norm_, params_.scale_matrix(released_qi));
  } else {
    const Matrix release_only = fuse(*fis_, release);
    ms.before = dissimilarity(p_sens_norm_, params_.scale_matrix(release_only));
  }
  ms.after = dissimilarity(p_sens_norm_, params_.scale_matrix(estimate));
  ms.gain = information_gain(ms.before, ms.after);
  ms.util = utility(release);

  if (cfg.mode == ObjectiveMode::Scalar) {
    ms.objective = objective_scalar(ms.after, ms.util, cfg);
  } else {
    const Matrix estimate_norm = params_.scale_matrix(estimate);
    Matrix residuals = p_sens_norm_;
    for (std::size_t i = 0; i < residuals.data.size(); ++i) {
      residuals.data[i] -= estimate_norm.data[i];
    }
    ms.objective = objective_trace_weighted(residuals, ms.util.per_record, cfg);
  }
  ms.feasible_protection = ms.after.value >= cfg.protection_threshold;
  ms.feasible_utility = ms.util.aggregate >= cfg.utility_threshold;
  return ms;
}

}  // namespace fred
