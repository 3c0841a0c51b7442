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
#include <optional>
#include <string>
#include <vector>

#include "fred/fred.hpp"
#include "fred/metrics.hpp"

namespace fred {

/// FNV-1a 64-bit content digest, lowercase hex.
std::string fnv1a64_hex(const std::string& content);

struct SweepRow {
  int level = 0;
  int k = 0;
  double before = 0.0;
  double after = 0.0;
  double gain = 0.0;
  double utility = 0.0;
  double objective = 0.0;
  bool feasible_protection = false;
  bool feasible_utility = false;
};

SweepRow to_sweep_row(const MetricSet& ms);

struct OptimumSummary {
  int candidate_index = 0;
  int level = 0;
  int k = 0;
  double objective = 0.0;
};

/// Everything needed to reproduce and plot a sweep: input digests, the exact
/// configuration, one row per evaluated level, and the selection outcome.
/// Serialization is byte-deterministic unless a stamp is opted in.
struct SweepReport {
  std::map<std::string, std::string> input_paths;    // name -> path
  std::map<std::string, std::string> input_digests;  // name -> fnv1a64
  std::map<std::string, std::string> config;         // flag -> rendered value
  std::vector<SweepRow> rows;
  std::optional<OptimumSummary> optimum;
  std::optional<std::string> termination;
  std::optional<std::string> stamp;

  std::string to_json_text() const;
};

/// Two-column "k,value" plot files: before.csv, after.csv, gain.csv,
/// utility.csv, objective.csv.
void write_plot_csvs(const std::vector<SweepRow>& rows, const std::string& out_dir);

/// Release CSV (suppressed sensitive fields empty) plus a JSON sidecar with
/// level, k, class sizes, and the centroid table.
void write_release_files(const AnonymizedRelease& release, const std::string& csv_path,
                         const std::string& sidecar_path);

}  // namespace fred
