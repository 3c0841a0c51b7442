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

#include "fred/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fred/csv.hpp"
#include "fred/fixtures.hpp"
#include "fred/fred.hpp"
#include "fred/report.hpp"
#include "fred/version.hpp"

namespace fred::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string data;
  std::string schema;
  std::string aux;
  std::string fis;
  std::string truth;
  std::string out;
  int level = 0;
  int kmin = 2;
  int kmax = 2;
  double tp = 0.0;
  double tu = 0.0;
  double w1 = 0.5;
  double w2 = 0.5;
  std::string mode = "scalar";
  bool parallel = false;
  bool stamp = false;
};

AttributeSchema release_side(const AttributeSchema& master) {
  return master.restricted_to({Role::QuasiIdentifier, Role::Sensitive});
}

AttributeSchema aux_side(const AttributeSchema& master) {
  return master.restricted_to({Role::Auxiliary});
}

ObjectiveMode parse_mode(const std::string& text) {
  if (text == "scalar") return ObjectiveMode::Scalar;
  if (text == "trace") return ObjectiveMode::TraceWeighted;
  throw ValidationError("unknown objective mode '" + text + "' (use scalar or trace)");
}

ObjectiveConfig objective_from(const Options& opt) {
  ObjectiveConfig cfg;
  cfg.protection_weight = opt.w1;
  cfg.utility_weight = opt.w2;
  cfg.protection_threshold = opt.tp;
  cfg.utility_threshold = opt.tu;
  cfg.mode = parse_mode(opt.mode);
  cfg.validate();
  return cfg;
}

std::string utc_stamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void ensure_out_dir(const std::string& out) {
  if (out.empty()) throw ValidationError("--out directory is required");
  fs::create_directories(out);
}

/// Reads a file once, remembering path and digest for the report.
struct InputFile {
  std::string name;
  std::string path;
  std::string content;
};

InputFile slurp(const std::string& name, const std::string& path) {
  return {name, path, csv::read_file(path)};
}

void record_inputs(SweepReport& report, const std::vector<InputFile>& inputs) {
  for (const InputFile& input : inputs) {
    report.input_paths[input.name] = input.path;
    report.input_digests[input.name] = fnv1a64_hex(input.content);
  }
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

// --- anonymize ---------------------------------------------------------------

int run_anonymize(const Options& opt) {
  const AttributeSchema master = AttributeSchema::from_json_file(opt.schema);
  const Dataset p = load_dataset(opt.data, release_side(master));
  const AnonymizedRelease release = basic_anonymization(p, opt.level);

  ensure_out_dir(opt.out);
  const fs::path out(opt.out);
  write_release_files(release, (out / "release.csv").string(), (out / "release.json").string());

  std::cout << "anonymized " << p.row_count() << " records at level " << release.level
            << " (k=" << release.k << ", " << release.partition.classes.size()
            << " classes)\n";
  return 0;
}

// --- attack ------------------------------------------------------------------

int run_attack(const Options& opt) {
  const AttributeSchema master = AttributeSchema::from_json_file(opt.schema);
  const AnonymizedRelease release = load_release(opt.data, release_side(master));
  const Dataset aux = load_dataset(opt.aux, aux_side(master));
  const FuzzyInferenceSystem fis = parse_fis(opt.fis, master);

  const Matrix estimate = fuse(fis, release, aux);

  ensure_out_dir(opt.out);
  std::string text = csv::serialize_row(
      {release.dataset.schema().identifier().name, estimate.column_names[0]});
  for (std::size_t r = 0; r < estimate.rows; ++r) {
    text += csv::serialize_row(
        {release.dataset.identifier_of(r), csv::format_number(estimate.at(r, 0))});
  }
  csv::write_file((fs::path(opt.out) / "estimates.csv").string(), text);
  std::cout << "estimated " << estimate.rows << " records\n";

  if (!opt.truth.empty()) {
    const Dataset truth = load_dataset(opt.truth, release_side(master));
    // Align estimates with the truth rows by identifier.
    Matrix aligned = Matrix::zeros(truth.row_count(), 1);
    aligned.column_names = estimate.column_names;
    for (std::size_t r = 0; r < truth.row_count(); ++r) {
      const auto row = release.dataset.row_of_identifier(truth.identifier_of(r));
      if (!row) {
        throw ValidationError("truth identifier '" + truth.identifier_of(r) +
                              "' is missing from the release");
      }
      aligned.at(r, 0) = estimate.at(*row, 0);
    }

    NormalizationParams params;
    if (master.normalize()) params = NormalizationParams::fit(truth);
    const Matrix truth_sens = numeric_view(truth, {Role::Sensitive});
    const DissimilarityValue after =
        dissimilarity(params.scale_matrix(truth_sens), params.scale_matrix(aligned));
    std::cout << "dissimilarity-after: " << csv::format_number(after.value) << "\n";
    std::cout << "absolute errors:\n";
    for (std::size_t r = 0; r < truth.row_count(); ++r) {
      std::cout << "  " << truth.identifier_of(r) << ": "
                << csv::format_number(std::abs(truth_sens.at(r, 0) - aligned.at(r, 0)))
                << "\n";
    }
  }
  return 0;
}

// --- sweep -------------------------------------------------------------------

int run_sweep(const Options& opt) {
  const std::vector<InputFile> inputs = {slurp("data", opt.data), slurp("schema", opt.schema),
                                         slurp("aux", opt.aux), slurp("fis", opt.fis)};
  const AttributeSchema master = AttributeSchema::from_json_text(inputs[1].content);
  const Dataset p = parse_dataset_csv(inputs[0].content, release_side(master));
  const Dataset q = parse_dataset_csv(inputs[2].content, aux_side(master));
  const FuzzyInferenceSystem fis = parse_fis_text(inputs[3].content, master);

  if (opt.kmin < 2 || opt.kmax < opt.kmin ||
      static_cast<std::size_t>(opt.kmax) > p.row_count()) {
    throw ValidationError("k range must satisfy 2 <= kmin <= kmax <= m");
  }
  const ObjectiveConfig objective = objective_from(opt);

  const std::vector<MetricSet> sets =
      evaluate_levels(p, q, fis, opt.kmin - 2, opt.kmax - 2, objective, opt.parallel);

  SweepReport report;
  record_inputs(report, inputs);
  report.config = {{"command", "sweep"},
                   {"data", opt.data},
                   {"schema", opt.schema},
                   {"aux", opt.aux},
                   {"fis", opt.fis},
                   {"kmin", std::to_string(opt.kmin)},
                   {"kmax", std::to_string(opt.kmax)},
                   {"tp", csv::format_number(opt.tp)},
                   {"tu", csv::format_number(opt.tu)},
                   {"w1", csv::format_number(opt.w1)},
                   {"w2", csv::format_number(opt.w2)},
                   {"mode", opt.mode},
                   {"parallel", bool_text(opt.parallel)}};
  for (const MetricSet& ms : sets) report.rows.push_back(to_sweep_row(ms));
  if (opt.stamp) report.stamp = utc_stamp();

  ensure_out_dir(opt.out);
  csv::write_file((fs::path(opt.out) / "report.json").string(), report.to_json_text());
  write_plot_csvs(report.rows, opt.out);
  std::cout << "swept k=" << opt.kmin << ".." << opt.kmax << " (" << report.rows.size()
            << " levels)\n";
  return 0;
}

// --- optimize ----------------------------------------------------------------

int run_optimize(const Options& opt) {
  const std::vector<InputFile> inputs = {slurp("data", opt.data), slurp("schema", opt.schema),
                                         slurp("aux", opt.aux), slurp("fis", opt.fis)};
  const AttributeSchema master = AttributeSchema::from_json_text(inputs[1].content);
  const Dataset p = parse_dataset_csv(inputs[0].content, release_side(master));
  const Dataset q = parse_dataset_csv(inputs[2].content, aux_side(master));
  const FuzzyInferenceSystem fis = parse_fis_text(inputs[3].content, master);

  FredConfig cfg;
  cfg.objective = objective_from(opt);
  cfg.parallel = opt.parallel;
  const FredResult result = fred_anonymize(p, q, fis, cfg);

  SweepReport report;
  record_inputs(report, inputs);
  report.config = {{"command", "optimize"},
                   {"data", opt.data},
                   {"schema", opt.schema},
                   {"aux", opt.aux},
                   {"fis", opt.fis},
                   {"tp", csv::format_number(opt.tp)},
                   {"tu", csv::format_number(opt.tu)},
                   {"w1", csv::format_number(opt.w1)},
                   {"w2", csv::format_number(opt.w2)},
                   {"mode", opt.mode},
                   {"parallel", bool_text(opt.parallel)}};
  for (const MetricSet& ms : result.all_levels) report.rows.push_back(to_sweep_row(ms));
  report.termination = to_string(result.termination);
  if (result.optimum) {
    report.optimum = OptimumSummary{result.optimum->candidate_index, result.optimum->level,
                                    result.optimum->metrics.k,
                                    result.optimum->metrics.objective};
  }
  if (opt.stamp) report.stamp = utc_stamp();

  ensure_out_dir(opt.out);
  const fs::path out(opt.out);
  csv::write_file((out / "report.json").string(), report.to_json_text());
  write_plot_csvs(report.rows, opt.out);

  if (result.optimum) {
    write_release_files(*result.optimum->release, (out / "release.csv").string(),
                        (out / "release.json").string());
    std::cout << "optimal level " << result.optimum->level
              << " (k=" << result.optimum->metrics.k
              << "), objective=" << csv::format_number(result.optimum->metrics.objective)
              << "\n";
  } else {
    std::cout << "no feasible release: no level meets both thresholds\n";
  }
  return 0;
}

// --- demo --------------------------------------------------------------------

int run_demo(const Options& opt) {
  const FixtureSet fixture = demo_fixture();
  const AttributeSchema master = AttributeSchema::from_json_text(fixture.schema_json);
  const Dataset p = parse_dataset_csv(fixture.data_csv, release_side(master));
  const Dataset aux = parse_dataset_csv(fixture.aux_csv, aux_side(master));
  const FuzzyInferenceSystem fis = parse_fis_text(fixture.fis_json, master);

  const AnonymizedRelease release = basic_anonymization(p, 0);
  const Matrix estimate = fuse(fis, release, aux);

  const MetricContext context(p);
  ObjectiveConfig objective;  // equal weights, no thresholds
  const MetricSet ms = context.evaluate(release, estimate, objective);

  const Matrix truth = numeric_view(p, {Role::Sensitive});
  std::cout << "released at k=" << release.k << "; sensitive column '"
            << estimate.column_names[0] << "' suppressed, then re-estimated by fusing\n"
            << "the release with looked-up employment and property data:\n\n";
  std::cout << "  name        actual     estimated  error\n";
  for (std::size_t r = 0; r < p.row_count(); ++r) {
    std::ostringstream line;
    line << "  " << p.identifier_of(r);
    for (std::size_t pad = p.identifier_of(r).size(); pad < 12; ++pad) line << ' ';
    line << csv::format_number(truth.at(r, 0)) << "      "
         << csv::format_number(estimate.at(r, 0)) << "      "
         << csv::format_number(std::abs(truth.at(r, 0) - estimate.at(r, 0)));
    std::cout << line.str() << "\n";
  }
  std::cout << "\nquasi-identifier distortion: " << csv::format_number(ms.before.value)
            << "\nestimate dissimilarity:      " << csv::format_number(ms.after.value)
            << "\nadversary information gain:  " << csv::format_number(ms.gain) << "\n";

  if (!opt.out.empty()) {
    ensure_out_dir(opt.out);
    const fs::path out(opt.out);
    write_fixture_set(fixture, (out / "fixture").string());
    write_release_files(release, (out / "release.csv").string(),
                        (out / "release.json").string());
  }
  return 0;
}

}  // namespace

int main(int argc, const char* const* argv) {
  Options opt;
  CLI::App app{"fusion-resilient enterprise data anonymization toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto add_common_inputs = [&](CLI::App* cmd, bool with_aux_fis) {
    cmd->add_option("--data", opt.data, "input CSV")->required();
    cmd->add_option("--schema", opt.schema, "schema JSON")->required();
    if (with_aux_fis) {
      cmd->add_option("--aux", opt.aux, "auxiliary CSV")->required();
      cmd->add_option("--fis", opt.fis, "fuzzy rule system JSON")->required();
    }
  };

  CLI::App* anonymize = app.add_subcommand("anonymize", "microaggregate one release");
  add_common_inputs(anonymize, false);
  anonymize->add_option("--level", opt.level, "anonymization level (k = level + 2)")->required();
  anonymize->add_option("--out", opt.out, "output directory")->required();

  CLI::App* attack = app.add_subcommand("attack", "simulate the fusion attack on a release");
  add_common_inputs(attack, true);
  attack->add_option("--truth", opt.truth, "original data CSV for error reporting");
  attack->add_option("--out", opt.out, "output directory")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate metrics across a k range");
  add_common_inputs(sweep, true);
  sweep->add_option("--kmin", opt.kmin, "smallest k")->required();
  sweep->add_option("--kmax", opt.kmax, "largest k")->required();
  sweep->add_option("--tp", opt.tp, "protection threshold");
  sweep->add_option("--tu", opt.tu, "utility threshold");
  sweep->add_option("--w1", opt.w1, "protection weight");
  sweep->add_option("--w2", opt.w2, "utility weight");
  sweep->add_option("--mode", opt.mode, "objective mode: scalar|trace");
  sweep->add_flag("--parallel", opt.parallel, "evaluate levels on worker threads");
  sweep->add_flag("--stamp", opt.stamp, "embed a timestamp in the report");
  sweep->add_option("--out", opt.out, "output directory")->required();

  CLI::App* optimize = app.add_subcommand("optimize", "select the level maximizing the objective");
  add_common_inputs(optimize, true);
  optimize->add_option("--tp", opt.tp, "protection threshold")->required();
  optimize->add_option("--tu", opt.tu, "utility threshold")->required();
  optimize->add_option("--w1", opt.w1, "protection weight");
  optimize->add_option("--w2", opt.w2, "utility weight");
  optimize->add_option("--mode", opt.mode, "objective mode: scalar|trace");
  optimize->add_flag("--parallel", opt.parallel, "evaluate levels on worker threads");
  optimize->add_flag("--stamp", opt.stamp, "embed a timestamp in the report");
  optimize->add_option("--out", opt.out, "output directory")->required();

  CLI::App* demo = app.add_subcommand("demo", "run the bundled four-customer walkthrough");
  demo->add_option("--out", opt.out, "also write the fixture and release files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*anonymize) return run_anonymize(opt);
    if (*attack) return run_attack(opt);
    if (*sweep) return run_sweep(opt);
    if (*optimize) return run_optimize(opt);
    if (*demo) return run_demo(opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace fred::cli
