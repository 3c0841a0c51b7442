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

#include "fred/report.hpp"

#include <cstdint>
#include <filesystem>

#include "fred/csv.hpp"
#include "fred/version.hpp"
#include "json.hpp"

namespace fred {

std::string fnv1a64_hex(const std::string& content) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char byte : content) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return std::string(buf, 16);
}

SweepRow to_sweep_row(const MetricSet& ms) {
  SweepRow row;
  row.level = ms.level;
  row.k = ms.k;
  row.before = ms.before.value;
  row.after = ms.after.value;
  row.gain = ms.gain;
  row.utility = ms.util.aggregate;
  row.objective = ms.objective;
  row.feasible_protection = ms.feasible_protection;
  row.feasible_utility = ms.feasible_utility;
  return row;
}

std::string SweepReport::to_json_text() const {
  using nlohmann::json;
  json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};

  json inputs = json::object();
  for (const auto& [name, path] : input_paths) {
    json entry;
    entry["path"] = path;
    auto digest = input_digests.find(name);
    if (digest != input_digests.end()) entry["fnv1a64"] = digest->second;
    inputs[name] = entry;
  }
  doc["inputs"] = inputs;

  json config_node = json::object();
  for (const auto& [flag, value] : config) config_node[flag] = value;
  doc["config"] = config_node;

  doc["levels"] = json::array();
  for (const SweepRow& row : rows) {
    doc["levels"].push_back({{"level", row.level},
                             {"k", row.k},
                             {"before", row.before},
                             {"after", row.after},
                             {"gain", row.gain},
                             {"utility", row.utility},
                             {"objective", row.objective},
                             {"feasible_protection", row.feasible_protection},
                             {"feasible_utility", row.feasible_utility}});
  }

  if (optimum) {
    doc["optimum"] = {{"candidate_index", optimum->candidate_index},
                      {"level", optimum->level},
                      {"k", optimum->k},
                      {"objective", optimum->objective}};
  } else {
    doc["optimum"] = nullptr;
  }
  if (termination) doc["termination"] = *termination;
  if (stamp) doc["stamp"] = *stamp;
  return doc.dump(2) + "\n";
}

void write_plot_csvs(const std::vector<SweepRow>& rows, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  auto write_series = [&](const std::string& name, auto getter) {
    std::string text = "k,value\n";
    for (const SweepRow& row : rows) {
      text += std::to_string(row.k) + "," + csv::format_number(getter(row)) + "\n";
    }
    csv::write_file((dir / name).string(), text);
  };
  write_series("before.csv", [](const SweepRow& r) { return r.before; });
  write_series("after.csv", [](const SweepRow& r) { return r.after; });
  write_series("gain.csv", [](const SweepRow& r) { return r.gain; });
  write_series("utility.csv", [](const SweepRow& r) { return r.utility; });
  write_series("objective.csv", [](const SweepRow& r) { return r.objective; });
}

void write_release_files(const AnonymizedRelease& release, const std::string& csv_path,
                         const std::string& sidecar_path) {
  write_dataset_csv(release.dataset, csv_path);

  using nlohmann::json;
  json doc;
  doc["level"] = release.level;
  doc["k"] = release.k;
  json sizes = json::array();
  for (std::size_t s : equivalence_class_sizes(release)) sizes.push_back(s);
  doc["class_sizes"] = sizes;

  json centroids = json::array();
  const Matrix qi = numeric_view(release.dataset, {Role::QuasiIdentifier});
  for (std::size_t g = 0; g < release.partition.classes.size(); ++g) {
    json row = json::object();
    for (std::size_t c = 0; c < qi.column_names.size(); ++c) {
      row[qi.column_names[c]] = release.partition.centroids[g][c];
    }
    json entry;
    entry["rows"] = release.partition.classes[g];
    entry["centroid"] = row;
    centroids.push_back(entry);
  }
  doc["classes"] = centroids;
  csv::write_file(sidecar_path, doc.dump(2) + "\n");
}

}  // namespace fred
