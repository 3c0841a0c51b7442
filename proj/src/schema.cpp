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

#include "fred/schema.hpp"

#include <cmath>
#include <set>

#include "fred/csv.hpp"
#include "json.hpp"

namespace fred {

std::string to_string(Role role) {
  switch (role) {
    case Role::Identifier: return "identifier";
    case Role::QuasiIdentifier: return "quasi-identifier";
    case Role::Sensitive: return "sensitive";
    case Role::Auxiliary: return "auxiliary";
  }
  return "?";
}

std::string to_string(Kind kind) {
  return kind == Kind::Numeric ? "numeric" : "categorical";
}

Role parse_role(const std::string& text) {
  if (text == "identifier") return Role::Identifier;
  if (text == "quasi-identifier") return Role::QuasiIdentifier;
  if (text == "sensitive") return Role::Sensitive;
  if (text == "auxiliary") return Role::Auxiliary;
  throw ValidationError("unknown column role: '" + text + "'");
}

Kind parse_kind(const std::string& text) {
  if (text == "numeric") return Kind::Numeric;
  if (text == "categorical") return Kind::Categorical;
  throw ValidationError("unknown column kind: '" + text + "'");
}

AttributeSchema::AttributeSchema(std::vector<Column> columns, bool normalize)
    : columns_(std::move(columns)), normalize_(normalize) {
  if (columns_.empty()) throw ValidationError("schema has no columns");

  std::set<std::string> seen;
  std::size_t identifier_count = 0;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const Column& col = columns_[i];
    if (col.name.empty()) throw ValidationError("schema column with empty name");
    if (!seen.insert(col.name).second) {
      throw ValidationError("duplicate schema column '" + col.name + "'");
    }
    if (col.role == Role::Identifier) {
      identifier_count++;
      identifier_index_ = i;
    }
    if (col.universe) {
      if (!(col.universe->lo < col.universe->hi) ||
          !std::isfinite(col.universe->lo) || !std::isfinite(col.universe->hi)) {
        throw ValidationError("column '" + col.name + "': universe must satisfy min < max");
      }
    }
    for (const auto& [label, score] : col.categories) {
      if (!std::isfinite(score)) {
        throw ValidationError("column '" + col.name + "': non-finite category score for '" + label + "'");
      }
      if (col.universe && !col.universe->contains(score)) {
        throw ValidationError("column '" + col.name + "': category score for '" + label +
                              "' lies outside the universe");
      }
    }
  }
  if (identifier_count != 1) {
    throw ValidationError("schema must declare exactly one identifier column, got " +
                          std::to_string(identifier_count));
  }
}

const Column* AttributeSchema::find(const std::string& name) const {
  for (const Column& col : columns_) {
    if (col.name == name) return &col;
  }
  return nullptr;
}

std::size_t AttributeSchema::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  throw ValidationError("unknown column '" + name + "'");
}

std::vector<std::size_t> AttributeSchema::role_indices(const std::set<Role>& roles) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (roles.count(columns_[i].role)) out.push_back(i);
  }
  return out;
}

AttributeSchema AttributeSchema::restricted_to(const std::set<Role>& roles) const {
  std::vector<Column> kept;
  for (const Column& col : columns_) {
    if (col.role == Role::Identifier || roles.count(col.role)) kept.push_back(col);
  }
  return AttributeSchema(std::move(kept), normalize_);
}

namespace {

using nlohmann::json;

Column column_from_json(const json& node) {
  if (!node.is_object()) throw ValidationError("schema column entry must be an object");
  Column col;
  col.name = node.at("name").get<std::string>();
  col.role = parse_role(node.at("role").get<std::string>());
  col.kind = parse_kind(node.at("kind").get<std::string>());
  if (node.contains("universe")) {
    const json& u = node.at("universe");
    if (!u.is_array() || u.size() != 2) {
      throw ValidationError("column '" + col.name + "': universe must be [min, max]");
    }
    col.universe = Interval{u[0].get<double>(), u[1].get<double>()};
  }
  if (node.contains("categories")) {
    for (const auto& [label, score] : node.at("categories").items()) {
      col.categories[label] = score.get<double>();
    }
  }
  return col;
}

}  // namespace

AttributeSchema AttributeSchema::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("schema JSON parse error: ") + e.what());
  }
  try {
    std::vector<Column> columns;
    for (const json& node : doc.at("columns")) columns.push_back(column_from_json(node));
    bool norm = doc.value("normalize", false);
    return AttributeSchema(std::move(columns), norm);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("schema JSON: ") + e.what());
  }
}

AttributeSchema AttributeSchema::from_json_file(const std::string& path) {
  return from_json_text(csv::read_file(path));
}

std::string AttributeSchema::to_json_text() const {
  json doc;
  doc["normalize"] = normalize_;
  doc["columns"] = json::array();
  for (const Column& col : columns_) {
    json node;
    node["name"] = col.name;
    node["role"] = to_string(col.role);
    node["kind"] = to_string(col.kind);
    if (col.universe) node["universe"] = {col.universe->lo, col.universe->hi};
    if (!col.categories.empty()) {
      json cats;
      for (const auto& [label, score] : col.categories) cats[label] = score;
      node["categories"] = cats;
    }
    doc["columns"].push_back(node);
  }
  return doc.dump(2) + "\n";
}

}  // namespace fred
