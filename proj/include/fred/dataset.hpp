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

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fred/schema.hpp"

namespace fred {

/// Marker for a sensitive value withheld from a release. Serializes to an
/// empty CSV field.
struct Suppressed {
  bool operator==(const Suppressed&) const = default;
};

using Cell = std::variant<double, std::string, Suppressed>;

bool is_number(const Cell& cell);
bool is_text(const Cell& cell);
bool is_suppressed(const Cell& cell);
double number_of(const Cell& cell);
const std::string& text_of(const Cell& cell);

/// Dense row-major numeric matrix over a chosen column subset.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
  std::vector<std::string> column_names;

  static Matrix zeros(std::size_t rows, std::size_t cols);

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  bool same_shape(const Matrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
};

/// Immutable validated table. Construction checks identifier uniqueness,
/// numeric finiteness, universe bounds, and category-map membership.
class Dataset {
 public:
  Dataset(AttributeSchema schema, std::vector<std::vector<Cell>> rows);

  const AttributeSchema& schema() const { return schema_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return schema_.size(); }

  const Cell& cell(std::size_t row, std::size_t col) const {
    return rows_[row][col];
  }
  const std::string& identifier_of(std::size_t row) const;
  std::optional<std::size_t> row_of_identifier(const std::string& id) const;

  /// Numeric reading of a cell; categorical text resolves through the
  /// column's category map. Throws for suppressed or unmapped values.
  double numeric_cell(std::size_t row, std::size_t col) const;

 private:
  AttributeSchema schema_;
  std::vector<std::vector<Cell>> rows_;
  std::unordered_map<std::string, std::size_t> by_identifier_;
};

struct ColumnScale {
  std::string column;
  double min = 0.0;
  double max = 0.0;
  bool scaled = false;    // false: pass-through
  bool constant = false;  // constant column, recorded as a warning
};

/// Per-column affine min-max parameters. Scaled values live in [0, 1] and are
/// invertible; constant and non-numeric columns pass through untouched.
class NormalizationParams {
 public:
  NormalizationParams() = default;  // disabled: identity everywhere

  static NormalizationParams fit(const Dataset& d);

  bool enabled() const { return enabled_; }
  const std::vector<ColumnScale>& entries() const { return entries_; }
  const ColumnScale* find(const std::string& column) const;

  double scale(const std::string& column, double x) const;
  double invert(const std::string& column, double x) const;
  Matrix scale_matrix(const Matrix& view) const;

 private:
  bool enabled_ = false;
  std::vector<ColumnScale> entries_;
};

struct LoadOptions {
  /// Accept empty sensitive fields as suppression markers (release files).
  bool allow_suppressed_sensitive = false;
};

Dataset load_dataset(const std::string& path, const AttributeSchema& schema,
                     const LoadOptions& options = {});
Dataset parse_dataset_csv(const std::string& text, const AttributeSchema& schema,
                          const LoadOptions& options = {});
std::string dataset_to_csv(const Dataset& d);
void write_dataset_csv(const Dataset& d, const std::string& path);

std::pair<Dataset, NormalizationParams> normalize(const Dataset& d, bool enabled);

/// Numeric matrix over the columns carrying any of `roles`, in schema order.
Matrix numeric_view(const Dataset& d, const std::set<Role>& roles);

/// Identifier-keyed pairing: one pair per left row, auxiliary side absent
/// when no auxiliary row shares the identifier.
struct JoinedView {
  const Dataset* left = nullptr;
  const Dataset* auxiliary = nullptr;
  std::vector<std::pair<std::size_t, std::optional<std::size_t>>> pairs;
};

JoinedView join_on_identifier(const Dataset& left, const Dataset& aux);

}  // namespace fred
