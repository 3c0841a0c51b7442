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

// Regenerates the bundled fixture files. Run from the repository root:
//   fred_gen_fixtures [fixtures-dir]

#include <filesystem>
#include <iostream>

#include "fred/fixtures.hpp"

int main(int argc, char** argv) {
  const std::string base = argc > 1 ? argv[1] : "fixtures";
  fred::write_fixture_set(fred::demo_fixture(), base + "/demo");
  fred::write_fixture_set(fred::synthetic_benchmark(), base + "/benchmark");
  std::cout << "wrote fixture sets under " << base << "/\n";
  return 0;
}
