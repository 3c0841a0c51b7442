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

#include <string>

namespace fred {

/// One bundled corpus as file texts: private data, auxiliary data, the shared
/// schema, and a reference rule system.
struct FixtureSet {
  std::string data_csv;
  std::string aux_csv;
  std::string schema_json;
  std::string fis_json;
};

/// The four-customer walkthrough: a bank's customer table, the auxiliary
/// facts an insider can look up on the web, and the narrative rule set that
/// pushes Robert's income estimate into the top band.
FixtureSet demo_fixture();

/// Deterministic 200-record benchmark. Row i (1-based) draws five scatter
/// streams w_j = frac(i * sqrt(prime_j)) for primes {2,3,5,7,11}; salary is
/// an affine blend of the two auxiliary drivers, and the three review scores
/// mix that blend with independent scatter. See the generator source for the
/// exact constants.
FixtureSet synthetic_benchmark();

/// Write a fixture set into a directory with canonical file names
/// (data.csv, aux.csv, schema.json, fis.json).
void write_fixture_set(const FixtureSet& fixture, const std::string& dir);

}  // namespace fred
