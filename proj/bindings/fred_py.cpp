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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fred/fixtures.hpp"
#include "fred/fred.hpp"
#include "fred/report.hpp"
#include "fred/version.hpp"

namespace py = pybind11;

namespace {

using namespace fred;

py::array_t<double> to_numpy(const Matrix& m) {
  py::array_t<double> arr({m.rows, m.cols});
  auto view = arr.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) view(r, c) = m.at(r, c);
  }
  return arr;
}

Matrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() != 2) throw ValidationError("expected a 2-D array");
  Matrix m = Matrix::zeros(static_cast<std::size_t>(arr.shape(0)),
                           static_cast<std::size_t>(arr.shape(1)));
  auto view = arr.unchecked<2>();
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = view(r, c);
  }
  return m;
}

std::set<Role> roles_from(const std::vector<std::string>& names) {
  std::set<Role> roles;
  for (const auto& name : names) roles.insert(parse_role(name));
  return roles;
}

ObjectiveConfig objective_from_kwargs(double w1, double w2, double tp, double tu,
                                      const std::string& mode) {
  ObjectiveConfig cfg;
  cfg.protection_weight = w1;
  cfg.utility_weight = w2;
  cfg.protection_threshold = tp;
  cfg.utility_threshold = tu;
  if (mode == "scalar") cfg.mode = ObjectiveMode::Scalar;
  else if (mode == "trace") cfg.mode = ObjectiveMode::TraceWeighted;
  else throw ValidationError("unknown objective mode '" + mode + "'");
  cfg.validate();
  return cfg;
}

py::dict metric_set_dict(const MetricSet& ms) {
  py::dict d;
  d["level"] = ms.level;
  d["k"] = ms.k;
  d["before"] = ms.before.value;
  d["after"] = ms.after.value;
  d["gain"] = ms.gain;
  d["utility"] = ms.util.aggregate;
  d["objective"] = ms.objective;
  d["feasible_protection"] = ms.feasible_protection;
  d["feasible_utility"] = ms.feasible_utility;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Anonymization toolkit: microaggregation, fuzzy fusion attack "
            "simulation, and protection/utility level selection.";
  m.attr("__version__") = kToolVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<AttributeSchema>(m, "AttributeSchema")
      .def_static("from_file", &AttributeSchema::from_json_file, py::arg("path"))
      .def_static("from_text", &AttributeSchema::from_json_text, py::arg("text"))
      .def_property_readonly("normalize", &AttributeSchema::normalize)
      .def_property_readonly("column_names",
                             [](const AttributeSchema& s) {
                               std::vector<std::string> names;
                               for (const auto& col : s.columns()) names.push_back(col.name);
                               return names;
                             })
      .def("restricted_to",
           [](const AttributeSchema& s, const std::vector<std::string>& roles) {
             return s.restricted_to(roles_from(roles));
           },
           py::arg("roles"))
      .def("to_json", &AttributeSchema::to_json_text);

  py::class_<Dataset>(m, "Dataset")
      .def_property_readonly("row_count", &Dataset::row_count)
      .def_property_readonly("column_count", &Dataset::column_count)
      .def_property_readonly("identifiers",
                             [](const Dataset& d) {
                               std::vector<std::string> ids;
                               for (std::size_t r = 0; r < d.row_count(); ++r) {
                                 ids.push_back(d.identifier_of(r));
                               }
                               return ids;
                             })
      .def("numeric_view",
           [](const Dataset& d, const std::vector<std::string>& roles) {
             return to_numpy(numeric_view(d, roles_from(roles)));
           },
           py::arg("roles"))
      .def("to_csv", &dataset_to_csv);

  py::class_<Partition>(m, "Partition")
      .def_readonly("classes", &Partition::classes)
      .def_readonly("centroids", &Partition::centroids)
      .def_readonly("k", &Partition::k);

  py::class_<AnonymizedRelease>(m, "AnonymizedRelease")
      .def_readonly("level", &AnonymizedRelease::level)
      .def_readonly("k", &AnonymizedRelease::k)
      .def_readonly("partition", &AnonymizedRelease::partition)
      .def_property_readonly("dataset",
                             [](const AnonymizedRelease& r) { return r.dataset; })
      .def_property_readonly("class_sizes", [](const AnonymizedRelease& r) {
        return equivalence_class_sizes(r);
      });

  py::class_<FuzzyInferenceSystem>(m, "FuzzyInferenceSystem")
      .def_property_readonly("output_name",
                             [](const FuzzyInferenceSystem& fis) { return fis.output().name; })
      .def_property_readonly("rule_count",
                             [](const FuzzyInferenceSystem& fis) { return fis.rules().size(); })
      .def("infer", &infer_record, py::arg("inputs"));

  m.def("load_schema", &AttributeSchema::from_json_file, py::arg("path"));
  m.def("load_dataset",
        [](const std::string& path, const AttributeSchema& schema, bool allow_suppressed) {
          LoadOptions options;
          options.allow_suppressed_sensitive = allow_suppressed;
          return load_dataset(path, schema, options);
        },
        py::arg("path"), py::arg("schema"), py::arg("allow_suppressed") = false);
  m.def("parse_dataset_csv",
        [](const std::string& text, const AttributeSchema& schema) {
          return parse_dataset_csv(text, schema);
        },
        py::arg("text"), py::arg("schema"));

  m.def("level_to_k", &level_to_k, py::arg("level"));
  m.def("mdav_partition",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& qi, int k) {
          return mdav_partition(from_numpy(qi), k);
        },
        py::arg("qi"), py::arg("k"));
  m.def("basic_anonymization", &basic_anonymization, py::arg("data"), py::arg("level"));
  m.def("load_release", &load_release, py::arg("path"), py::arg("schema"));

  m.def("parse_fis", &parse_fis, py::arg("path"), py::arg("schema"));
  m.def("parse_fis_text", &parse_fis_text, py::arg("text"), py::arg("schema"));
  m.def("fuse",
        [](const FuzzyInferenceSystem& fis, const AnonymizedRelease& release,
           const Dataset& aux) { return to_numpy(fuse(fis, release, aux)); },
        py::arg("fis"), py::arg("release"), py::arg("aux"));

  m.def("dissimilarity",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& b) {
          return dissimilarity(from_numpy(a), from_numpy(b)).value;
        },
        py::arg("a"), py::arg("b"));
  m.def("discernibility_cost",
        [](const std::vector<std::size_t>& sizes, int k, std::size_t dataset_size) {
          const DiscernibilityCost cost = discernibility_cost(sizes, k, dataset_size);
          return py::make_tuple(cost.total, cost.per_record);
        },
        py::arg("class_sizes"), py::arg("k"), py::arg("dataset_size"));
  m.def("utility",
        [](const AnonymizedRelease& release) {
          const UtilityValue u = utility(release);
          return py::make_tuple(u.aggregate, u.per_record);
        },
        py::arg("release"));

  m.def("fred_anonymize",
        [](const Dataset& p, const Dataset& q, const FuzzyInferenceSystem& fis, double w1,
           double w2, double tp, double tu, const std::string& mode, bool parallel,
           std::optional<int> level_cap) {
          FredConfig cfg;
          cfg.objective = objective_from_kwargs(w1, w2, tp, tu, mode);
          cfg.parallel = parallel;
          cfg.level_cap = level_cap;
          const FredResult result = fred_anonymize(p, q, fis, cfg);

          py::dict out;
          py::list levels;
          for (const MetricSet& ms : result.all_levels) levels.append(metric_set_dict(ms));
          out["levels"] = levels;
          py::list candidates;
          for (const CandidateRecord& c : result.candidates) {
            candidates.append(metric_set_dict(c.metrics));
          }
          out["candidates"] = candidates;
          out["termination"] = to_string(result.termination);
          out["levels_evaluated"] = result.levels_evaluated;
          if (result.optimum) {
            out["optimum"] = metric_set_dict(result.optimum->metrics);
          } else {
            out["optimum"] = py::none();
          }
          return out;
        },
        py::arg("data"), py::arg("aux"), py::arg("fis"), py::arg("w1") = 0.5,
        py::arg("w2") = 0.5, py::arg("tp") = 0.0, py::arg("tu") = 0.0,
        py::arg("mode") = "scalar", py::arg("parallel") = false,
        py::arg("level_cap") = std::nullopt);

  m.def("evaluate_levels",
        [](const Dataset& p, const Dataset& q, const FuzzyInferenceSystem& fis, int kmin,
           int kmax, double w1, double w2, double tp, double tu, const std::string& mode,
           bool parallel) {
          const auto sets = evaluate_levels(p, q, fis, kmin - 2, kmax - 2,
                                            objective_from_kwargs(w1, w2, tp, tu, mode),
                                            parallel);
          py::list out;
          for (const MetricSet& ms : sets) out.append(metric_set_dict(ms));
          return out;
        },
        py::arg("data"), py::arg("aux"), py::arg("fis"), py::arg("kmin"), py::arg("kmax"),
        py::arg("w1") = 0.5, py::arg("w2") = 0.5, py::arg("tp") = 0.0, py::arg("tu") = 0.0,
        py::arg("mode") = "scalar", py::arg("parallel") = false);

  m.def("demo_fixture", [] {
    const FixtureSet f = demo_fixture();
    py::dict d;
    d["data_csv"] = f.data_csv;
    d["aux_csv"] = f.aux_csv;
    d["schema_json"] = f.schema_json;
    d["fis_json"] = f.fis_json;
    return d;
  });
  m.def("synthetic_benchmark", [] {
    const FixtureSet f = synthetic_benchmark();
    py::dict d;
    d["data_csv"] = f.data_csv;
    d["aux_csv"] = f.aux_csv;
    d["schema_json"] = f.schema_json;
    d["fis_json"] = f.fis_json;
    return d;
  });
}
