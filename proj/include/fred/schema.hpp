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
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fred {

/// Malformed input of any kind: files, schemas, parameter combinations.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Role { Identifier, QuasiIdentifier, Sensitive, Auxiliary };
enum class Kind { Numeric, Categorical };

std::string to_string(Role role);
std::string to_string(Kind kind);
Role parse_role(const std::string& text);
Kind parse_kind(const std::string& text);

/// Closed interval in the attribute's own units.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
  double midpoint() const { return 0.5 * (lo + hi); }
};

struct Column {
  std::string name;
  Role role = Role::QuasiIdentifier;
  Kind kind = Kind::Numeric;
  std::optional<Interval> universe;
  std::map<std::string, double> categories;  // label -> numeric score

  bool has_category_map() const { return !categories.empty(); }
};

/// Ordered column descriptions for one table family, plus the ingestion-time
/// normalization switch. Exactly one column carries the identifier role and
/// column names are unique.
class AttributeSchema {
 public:
  AttributeSchema(std::vector<Column> columns, bool normalize);

  static AttributeSchema from_json_text(const std::string& text);
  static AttributeSchema from_json_file(const std::string& path);
  std::string to_json_text() const;

  const std::vector<Column>& columns() const { return columns_; }
  std::size_t size() const { return columns_.size(); }
  bool normalize() const { return normalize_; }

  std::size_t identifier_index() const { return identifier_index_; }
  const Column& identifier() const { return columns_[identifier_index_]; }

  const Column* find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws on unknown name
  std::vector<std::size_t> role_indices(const std::set<Role>& roles) const;

  /// Sub-schema keeping the identifier plus every column whose role is in
  /// `roles`, in schema order.
  AttributeSchema restricted_to(const std::set<Role>& roles) const;

 private:
  std::vector<Column> columns_;
  bool normalize_ = false;
  std::size_t identifier_index_ = 0;
};

}  // namespace fred
