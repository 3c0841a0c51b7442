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

#include "fred/dataset.hpp"

namespace fred {

/// Fixed-size microaggregation grouping. Classes appear in formation order
/// with ascending row indices inside each class; every class size s obeys
/// k <= s <= 2k-1. Centroids are per-class column means in the units of the
/// matrix the partition was computed from.
struct Partition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::vector<double>> centroids;
  int k = 0;
};

/// Level 0 is the weakest anonymization (k = 2); each level adds one to k.
int level_to_k(int level);

/// Maximum-distance-to-average-vector clustering. Repeatedly pulls the record
/// farthest from the centroid of the remaining rows, groups it with its k-1
/// nearest neighbours, then does the same around the record farthest from it.
/// Once fewer than 3k rows remain, either one more class of k is split off
/// (when at least 2k remain) or the remainder forms a single class. Distance
/// ties are broken toward the lowest row index, so output is deterministic.
Partition mdav_partition(const Matrix& qi, int k);

std::vector<std::size_t> equivalence_class_sizes(const Partition& partition);

/// Microaggregated publication: quasi-identifier values replaced by class
/// centroids, sensitive values suppressed, identifiers kept verbatim.
struct AnonymizedRelease {
  Dataset dataset;
  Partition partition;  // centroids in original units
  int level = 0;
  int k = 0;
};

/// Cluster the quasi-identifier columns at k = level + 2 and publish
/// centroids. Clustering distance uses min-max scaled columns when the
/// schema's normalize flag is on; the released values are always in the
/// original units.
AnonymizedRelease basic_anonymization(const Dataset& p, int level);

std::vector<std::size_t> equivalence_class_sizes(const AnonymizedRelease& release);

JoinedView join_on_identifier(const AnonymizedRelease& release, const Dataset& aux);

/// Rebuild a release from a published CSV. Equivalence classes are recovered
/// by grouping identical quasi-identifier rows; k is the smallest group size.
AnonymizedRelease load_release(const std::string& path, const AttributeSchema& schema);

}  // namespace fred
