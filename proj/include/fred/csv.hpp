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
#include <vector>

namespace fred::csv {

// Comma-separated, UTF-8, double-quoted fields with "" escapes, optional CRLF.
std::vector<std::vector<std::string>> parse(const std::string& text);

std::string escape_field(const std::string& field);
std::string serialize_row(const std::vector<std::string>& fields);

/// Shortest round-trip decimal rendering of a double (locale independent).
std::string format_number(double value);

/// Strict full-field double parse. Returns false on any trailing garbage.
bool parse_number(const std::string& field, double& out);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fred::csv
