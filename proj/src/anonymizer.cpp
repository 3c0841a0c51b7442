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

#include "fred/anonymizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "fred/csv.hpp"

namespace fred {

int level_to_k(int level) {
  if (level < 0) throw ValidationError("anonymization level must be >= 0, got " +
                                       std::to_string(level));
  return level + 2;
}

namespace {

double squared_distance(const Matrix& m, std::size_t row, const std::vector<double>& point) {
  double acc = 0.0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    const double diff = m.at(row, c) - point[c];
    acc += diff * diff;
  }
  return acc;
}

std::vector<double> centroid_of(const Matrix& m, const std::vector<std::size_t>& rows) {
  std::vector<double> mean(m.cols, 0.0);
  for (std::size_t r : rows) {
    for (std::size_t c = 0; c < m.cols; ++c) mean[c] += m.at(r, c);
  }
  for (double& v : mean) v /= static_cast<double>(rows.size());
  return mean;
}

std::vector<double> row_of(const Matrix& m, std::size_t row) {
  std::vector<double> out(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) out[c] = m.at(row, c);
  return out;
}

// Farthest remaining row from `point`; ties go to the lowest row index.
std::size_t farthest_from(const Matrix& m, const std::vector<std::size_t>& remaining,
                          const std::vector<double>& point) {
  std::size_t best = remaining.front();
  double best_dist = squared_distance(m, best, point);
  for (std::size_t r : remaining) {
    const double dist = squared_distance(m, r, point);
    if (dist > best_dist) {
      best = r;
      best_dist = dist;
    }
  }
  return best;
}

// `anchor` plus its size-1 nearest remaining rows, removed from `remaining`.
std::vector<std::size_t> take_class(const Matrix& m, std::vector<std::size_t>& remaining,
                                    std::size_t anchor, std::size_t size) {
  const std::vector<double> anchor_row = row_of(m, anchor);
  std::vector<std::pair<double, std::size_t>> by_distance;
  by_distance.reserve(remaining.size());
  for (std::size_t r : remaining) {
    if (r == anchor) continue;
    by_distance.emplace_back(squared_distance(m, r, anchor_row), r);
  }
  std::sort(by_distance.begin(), by_distance.end());  // distance, then index

  std::vector<std::size_t> members{anchor};
  for (std::size_t i = 0; i + 1 < size; ++i) members.push_back(by_distance[i].second);
  std::sort(members.begin(), members.end());

  std::vector<std::size_t> rest;
  rest.reserve(remaining.size() - members.size());
  for (std::size_t r : remaining) {
    if (!std::binary_search(members.begin(), members.end(), r)) rest.push_back(r);
  }
  remaining = std::move(rest);
  return members;
}

}  // namespace

Partition mdav_partition(const Matrix& qi, int k) {
  if (k < 2) throw ValidationError("anonymity parameter k must be >= 2, got " + std::to_string(k));
  if (static_cast<std::size_t>(k) > qi.rows) {
    throw ValidationError("k exceeds record count (k=" + std::to_string(k) +
                          ", m=" + std::to_string(qi.rows) + ")");
  }
  for (double v : qi.data) {
    if (!std::isfinite(v)) throw ValidationError("mdav_partition: non-finite input");
  }

  const std::size_t kk = static_cast<std::size_t>(k);
  std::vector<std::size_t> remaining(qi.rows);
  std::iota(remaining.begin(), remaining.end(), 0);

  Partition part;
  part.k = k;

  while (remaining.size() >= 3 * kk) {
    const std::vector<double> center = centroid_of(qi, remaining);
    const std::size_t far = farthest_from(qi, remaining, center);
    const std::vector<double> far_row = row_of(qi, far);
    part.classes.push_back(take_class(qi, remaining, far, kk));
    const std::size_t opposite = farthest_from(qi, remaining, far_row);
    part.classes.push_back(take_class(qi, remaining, opposite, kk));
  }
  if (remaining.size() >= 2 * kk) {
    const std::vector<double> center = centroid_of(qi, remaining);
    const std::size_t far = farthest_from(qi, remaining, center);
    part.classes.push_back(take_class(qi, remaining, far, kk));
  }
  if (!remaining.empty()) {
    std::sort(remaining.begin(), remaining.end());
    part.classes.push_back(std::move(remaining));
  }

  part.centroids.reserve(part.classes.size());
  for (const auto& members : part.classes) part.centroids.push_back(centroid_of(qi, members));
  return part;
}

std::vector<std::size_t> equivalence_class_sizes(const Partition& partition) {
  std::vector<std::size_t> sizes;
  sizes.reserve(partition.classes.size());
  for (const auto& members : partition.classes) sizes.push_back(members.size());
  return sizes;
}

std::vector<std::size_t> equivalence_class_sizes(const AnonymizedRelease& release) {
  return equivalence_class_sizes(release.partition);
}

AnonymizedRelease basic_anonymization(const Dataset& p, int level) {
  const int k = level_to_k(level);
  if (static_cast<std::size_t>(k) > p.row_count()) {
    throw ValidationError("k exceeds record count (k=" + std::to_string(k) +
                          ", m=" + std::to_string(p.row_count()) + ")");
  }

  const Matrix qi = numeric_view(p, {Role::QuasiIdentifier});
  Matrix cluster_space = qi;
  if (p.schema().normalize()) {
    cluster_space = NormalizationParams::fit(p).scale_matrix(qi);
  }
  Partition part = mdav_partition(cluster_space, k);

  // Centroids published in original units: per-class column means of the raw
  // quasi-identifier values (the affine scaling commutes with the mean).
  for (std::size_t g = 0; g < part.classes.size(); ++g) {
    std::vector<double> mean(qi.cols, 0.0);
    for (std::size_t r : part.classes[g]) {
      for (std::size_t c = 0; c < qi.cols; ++c) mean[c] += qi.at(r, c);
    }
    for (double& v : mean) v /= static_cast<double>(part.classes[g].size());
    part.centroids[g] = std::move(mean);
  }

  std::vector<std::size_t> class_of(p.row_count());
  for (std::size_t g = 0; g < part.classes.size(); ++g) {
    for (std::size_t r : part.classes[g]) class_of[r] = g;
  }

  const auto qi_indices = p.schema().role_indices({Role::QuasiIdentifier});
  std::map<std::size_t, std::size_t> qi_position;  // schema column -> qi view column
  for (std::size_t i = 0; i < qi_indices.size(); ++i) qi_position[qi_indices[i]] = i;

  std::vector<std::vector<Cell>> rows;
  rows.reserve(p.row_count());
  for (std::size_t r = 0; r < p.row_count(); ++r) {
    std::vector<Cell> row;
    row.reserve(p.column_count());
    for (std::size_t c = 0; c < p.column_count(); ++c) {
      const Column& col = p.schema().columns()[c];
      if (col.role == Role::Sensitive) {
        row.emplace_back(Suppressed{});
      } else if (auto it = qi_position.find(c); it != qi_position.end()) {
        row.emplace_back(part.centroids[class_of[r]][it->second]);
      } else {
        row.push_back(p.cell(r, c));
      }
    }
    rows.push_back(std::move(row));
  }

  AnonymizedRelease release{Dataset(p.schema(), std::move(rows)), std::move(part), level, k};
  return release;
}

JoinedView join_on_identifier(const AnonymizedRelease& release, const Dataset& aux) {
  return join_on_identifier(release.dataset, aux);
}

AnonymizedRelease load_release(const std::string& path, const AttributeSchema& schema) {
  LoadOptions options;
  options.allow_suppressed_sensitive = true;
  Dataset dataset = load_dataset(path, schema, options);

  const Matrix qi = numeric_view(dataset, {Role::QuasiIdentifier});
  std::map<std::vector<double>, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < qi.rows; ++r) {
    std::vector<double> key(qi.cols);
    for (std::size_t c = 0; c < qi.cols; ++c) key[c] = qi.at(r, c);
    groups[std::move(key)].push_back(r);
  }

  Partition part;
  std::size_t min_size = dataset.row_count();
  for (auto& [key, members] : groups) {
    min_size = std::min(min_size, members.size());
    part.centroids.push_back(key);
    part.classes.push_back(std::move(members));
  }
  const int k = static_cast<int>(min_size);
  part.k = k;

  AnonymizedRelease release{std::move(dataset), std::move(part), k - 2, k};
  return release;
}

}  // namespace fred
