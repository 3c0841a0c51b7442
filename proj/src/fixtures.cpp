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

#include "fred/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "fred/csv.hpp"
#include "json.hpp"

namespace fred {

FixtureSet demo_fixture() {
  FixtureSet fixture;

  fixture.data_csv =
      "Name,Invst Vol,Invst Amt,Valuation,Income\n"
      "Alice,8,7,4,91250\n"
      "Bob,5,4,4,74340\n"
      "Christine,4,5,5,75123\n"
      "Robert,9,8,9,98230\n";

  fixture.aux_csv =
      "Name,Employment,Property Holdings\n"
      "Alice,\"CEO, Deutsche Bank\",3560\n"
      "Bob,\"Manager, Verizon\",1200\n"
      "Christine,\"Assistant, NYU\",720\n"
      "Robert,\"CEO, Microsoft\",5430\n";

  fixture.schema_json = R"({
  "normalize": true,
  "columns": [
    {"name": "Name", "role": "identifier", "kind": "categorical"},
    {"name": "Invst Vol", "role": "quasi-identifier", "kind": "numeric", "universe": [1, 10]},
    {"name": "Invst Amt", "role": "quasi-identifier", "kind": "numeric", "universe": [1, 10]},
    {"name": "Valuation", "role": "quasi-identifier", "kind": "numeric", "universe": [1, 10]},
    {"name": "Income", "role": "sensitive", "kind": "numeric", "universe": [40000, 100000]},
    {"name": "Employment", "role": "auxiliary", "kind": "categorical", "universe": [0, 10],
     "categories": {"CEO, Deutsche Bank": 9.5, "CEO, Microsoft": 10,
                    "Manager, Verizon": 5.5, "Assistant, NYU": 2}},
    {"name": "Property Holdings", "role": "auxiliary", "kind": "numeric", "universe": [0, 6000]}
  ]
}
)";

  fixture.fis_json = R"({
  "variables": [
    {"name": "Valuation", "source": "release", "universe": [1, 10],
     "terms": {
       "low":  {"shape": "trapezoidal", "params": [1, 1, 3, 5]},
       "mid":  {"shape": "triangular",  "params": [3, 5, 7.5]},
       "high": {"shape": "trapezoidal", "params": [5.5, 8, 10, 10]}
     }},
    {"name": "Employment", "source": "auxiliary", "universe": [0, 10],
     "terms": {
       "junior":    {"shape": "trapezoidal", "params": [0, 0, 2, 4]},
       "senior":    {"shape": "triangular",  "params": [3, 5.5, 8]},
       "executive": {"shape": "trapezoidal", "params": [8, 9, 10, 10]}
     }},
    {"name": "Property Holdings", "source": "auxiliary", "universe": [0, 6000],
     "terms": {
       "small":  {"shape": "trapezoidal", "params": [0, 0, 800, 1600]},
       "medium": {"shape": "triangular",  "params": [1000, 2400, 3800]},
       "large":  {"shape": "trapezoidal", "params": [3200, 4600, 6000, 6000]}
     }},
    {"name": "Income", "source": "output", "universe": [40000, 100000],
     "terms": {
       "low":    {"shape": "triangular", "params": [40000, 50000, 60000]},
       "medium": {"shape": "triangular", "params": [60000, 70000, 80000]},
       "high":   {"shape": "triangular", "params": [80000, 90000, 100000]},
       "top":    {"shape": "triangular", "params": [90000, 95000, 100000]}
     }}
  ],
  "rules": [
    {"if": [["Employment", "executive"], ["Property Holdings", "large"]],
     "connective": "and", "then": "top", "weight": 1.0},
    {"if": [["Valuation", "high"], ["Employment", "senior"]],
     "connective": "and", "then": "high", "weight": 1.0},
    {"if": [["Valuation", "mid"], ["Employment", "senior"]],
     "connective": "and", "then": "medium", "weight": 1.0},
    {"if": [["Valuation", "low"], ["Employment", "junior"]],
     "connective": "and", "then": "medium", "weight": 1.0}
  ]
}
)";

  return fixture;
}

namespace {

double frac(double x) { return x - std::floor(x); }
double round2(double x) { return std::round(x * 100.0) / 100.0; }

}  // namespace

FixtureSet synthetic_benchmark() {
  using nlohmann::json;
  FixtureSet fixture;

  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r11 = std::sqrt(11.0);
  const double r23 = std::sqrt(23.0);
  const double r37 = std::sqrt(37.0);

  std::string data = "id,review_a,review_b,review_c,salary\n";
  std::string aux = "id,seniority,publications\n";
  char id[16];
  for (int i = 1; i <= 200; ++i) {
    const double w1 = frac(i * r2);
    const double w2 = frac(i * r3);
    const double w3 = frac(i * r11);
    const double w4 = frac(i * r23);
    const double w5 = frac(i * r37);

    const double seniority = round2(40.0 * w1);
    const double publications = round2(100.0 * w2);
    // The salary driver is the equal blend of the two published auxiliary
    // values; the reviews mix that blend with independent scatter.
    const double blend = 0.5 * (seniority / 40.0) + 0.5 * (publications / 100.0);
    const double salary = round2(40000.0 + 60000.0 * blend);
    const double review_a = round2(10.0 * (0.4 * blend + 0.6 * w3));
    const double review_b = round2(10.0 * (0.35 * blend + 0.65 * w4));
    const double review_c = round2(10.0 * (0.3 * blend + 0.7 * w5));

    std::snprintf(id, sizeof(id), "emp%03d", i);
    data += std::string(id) + "," + csv::format_number(review_a) + "," +
            csv::format_number(review_b) + "," + csv::format_number(review_c) + "," +
            csv::format_number(salary) + "\n";
    aux += std::string(id) + "," + csv::format_number(seniority) + "," +
           csv::format_number(publications) + "\n";
  }
  fixture.data_csv = std::move(data);
  fixture.aux_csv = std::move(aux);

  json schema;
  schema["normalize"] = true;
  schema["columns"] = json::array(
      {{{"name", "id"}, {"role", "identifier"}, {"kind", "categorical"}},
       {{"name", "review_a"}, {"role", "quasi-identifier"}, {"kind", "numeric"}, {"universe", {0, 10}}},
       {{"name", "review_b"}, {"role", "quasi-identifier"}, {"kind", "numeric"}, {"universe", {0, 10}}},
       {{"name", "review_c"}, {"role", "quasi-identifier"}, {"kind", "numeric"}, {"universe", {0, 10}}},
       {{"name", "salary"}, {"role", "sensitive"}, {"kind", "numeric"}, {"universe", {40000, 100000}}},
       {{"name", "seniority"}, {"role", "auxiliary"}, {"kind", "numeric"}, {"universe", {0, 40}}},
       {{"name", "publications"}, {"role", "auxiliary"}, {"kind", "numeric"}, {"universe", {0, 100}}}});
  fixture.schema_json = schema.dump(2) + "\n";

  // Reference rule system: a 9x9 grid over the two auxiliary drivers hitting
  // the salary bands exactly at the grid points, plus a few coarse rules on
  // the released review scores.
  json fis;
  fis["variables"] = json::array();

  auto term_label = [](const char* prefix, int index) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%s%02d", prefix, index);
    return std::string(buf);
  };
  auto triangle_terms = [&](const char* prefix, int count, double lo, double hi) {
    json terms = json::object();
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
      const double peak = lo + step * i;
      const double left = i == 0 ? lo : peak - step;
      const double right = i == count - 1 ? hi : peak + step;
      terms[term_label(prefix, i)] = {{"shape", "triangular"}, {"params", {left, peak, right}}};
    }
    return terms;
  };

  fis["variables"].push_back({{"name", "seniority"},
                              {"source", "auxiliary"},
                              {"universe", {0, 40}},
                              {"terms", triangle_terms("S", 9, 0.0, 40.0)}});
  fis["variables"].push_back({{"name", "publications"},
                              {"source", "auxiliary"},
                              {"universe", {0, 100}},
                              {"terms", triangle_terms("P", 9, 0.0, 100.0)}});
  fis["variables"].push_back({{"name", "salary"},
                              {"source", "output"},
                              {"universe", {40000, 100000}},
                              {"terms", triangle_terms("B", 17, 40000.0, 100000.0)}});

  json review_terms = json::object();
  review_terms["low"] = {{"shape", "trapezoidal"}, {"params", {0, 0, 1, 2.5}}};
  review_terms["mid"] = {{"shape", "triangular"}, {"params", {4.4, 5.15, 5.9}}};
  review_terms["high"] = {{"shape", "trapezoidal"}, {"params", {8, 9.5, 10, 10}}};
  fis["variables"].push_back({{"name", "review_a"},
                              {"source", "release"},
                              {"universe", {0, 10}},
                              {"terms", review_terms}});
  fis["variables"].push_back({{"name", "review_b"},
                              {"source", "release"},
                              {"universe", {0, 10}},
                              {"terms", review_terms}});

  auto conjunct = [](const std::string& var, const std::string& term) {
    return json::array({var, term});
  };
  auto rule = [&](const json& antecedent, const std::string& connective,
                  const std::string& consequent) {
    return json{{"if", antecedent}, {"connective", connective}, {"then", consequent},
                {"weight", 1.0}};
  };

  json rules = json::array();
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      rules.push_back(rule(json::array({conjunct("seniority", term_label("S", a)),
                                        conjunct("publications", term_label("P", b))}),
                           "and", term_label("B", a + b)));
    }
  }
  rules.push_back(rule(json::array({conjunct("review_a", "high")}), "and", term_label("B", 14)));
  rules.push_back(rule(json::array({conjunct("review_a", "low")}), "and", term_label("B", 2)));
  rules.push_back(rule(json::array({conjunct("review_b", "high"), conjunct("review_a", "high")}),
                       "or", term_label("B", 13)));
  rules.push_back(rule(json::array({conjunct("review_a", "mid"), conjunct("review_b", "mid")}),
                       "and", term_label("B", 8)));
  fis["rules"] = rules;
  fixture.fis_json = fis.dump(2) + "\n";

  return fixture;
}

void write_fixture_set(const FixtureSet& fixture, const std::string& dir) {
  const std::filesystem::path base(dir);
  std::filesystem::create_directories(base);
  csv::write_file((base / "data.csv").string(), fixture.data_csv);
  csv::write_file((base / "aux.csv").string(), fixture.aux_csv);
  csv::write_file((base / "schema.json").string(), fixture.schema_json);
  csv::write_file((base / "fis.json").string(), fixture.fis_json);
}

}  // namespace fred
