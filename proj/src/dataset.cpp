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

#include "fred/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fred/csv.hpp"

namespace fred {

bool is_number(const Cell& cell) { return std::holds_alternative<double>(cell); }
bool is_text(const Cell& cell) { return std::holds_alternative<std::string>(cell); }
bool is_suppressed(const Cell& cell) { return std::holds_alternative<Suppressed>(cell); }

double number_of(const Cell& cell) {
  if (!is_number(cell)) throw ValidationError("cell is not numeric");
  return std::get<double>(cell);
}

const std::string& text_of(const Cell& cell) {
  if (!is_text(cell)) throw ValidationError("cell is not text");
  return std::get<std::string>(cell);
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  Matrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(rows * cols, 0.0);
  return m;
}

Dataset::Dataset(AttributeSchema schema, std::vector<std::vector<Cell>> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  if (rows_.empty()) throw ValidationError("dataset has no rows");

  const std::size_t id_col = schema_.identifier_index();
  by_identifier_.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.size() != schema_.size()) {
      throw ValidationError("row " + std::to_string(r + 1) + " has " +
                            std::to_string(row.size()) + " cells, schema has " +
                            std::to_string(schema_.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Column& col = schema_.columns()[c];
      const Cell& cell = row[c];
      if (c == id_col) {
        if (!is_text(cell) || text_of(cell).empty()) {
          throw ValidationError("row " + std::to_string(r + 1) + ": empty identifier");
        }
        continue;
      }
      if (is_suppressed(cell)) continue;
      if (is_number(cell)) {
        double v = number_of(cell);
        if (!std::isfinite(v)) {
          throw ValidationError("column '" + col.name + "', row " + std::to_string(r + 1) +
                                ": non-finite value");
        }
        if (col.universe && !col.universe->contains(v)) {
          throw ValidationError("column '" + col.name + "', row " + std::to_string(r + 1) +
                                ": value " + csv::format_number(v) +
                                " outside universe [" + csv::format_number(col.universe->lo) +
                                ", " + csv::format_number(col.universe->hi) + "]");
        }
      } else {  // text
        if (col.kind == Kind::Numeric) {
          throw ValidationError("column '" + col.name + "', row " + std::to_string(r + 1) +
                                ": non-numeric value '" + text_of(cell) + "'");
        }
        if (col.has_category_map() && !col.categories.count(text_of(cell))) {
          throw ValidationError("column '" + col.name + "', row " + std::to_string(r + 1) +
                                ": unmapped category label '" + text_of(cell) + "'");
        }
      }
    }
    const std::string& id = text_of(row[id_col]);
    if (!by_identifier_.emplace(id, r).second) {
      throw ValidationError("duplicate identifier '" + id + "'");
    }
  }
}

const std::string& Dataset::identifier_of(std::size_t row) const {
  return text_of(rows_[row][schema_.identifier_index()]);
}

std::optional<std::size_t> Dataset::row_of_identifier(const std::string& id) const {
  auto it = by_identifier_.find(id);
  if (it == by_identifier_.end()) return std::nullopt;
  return it->second;
}

double Dataset::numeric_cell(std::size_t row, std::size_t col) const {
  const Cell& cell = rows_[row][col];
  const Column& column = schema_.columns()[col];
  if (is_number(cell)) return number_of(cell);
  if (is_suppressed(cell)) {
    throw ValidationError("column '" + column.name + "' contains suppressed values");
  }
  if (!column.has_category_map()) {
    throw ValidationError("categorical column '" + column.name + "' has no category map");
  }
  return column.categories.at(text_of(cell));
}

// --- loading ---------------------------------------------------------------

namespace {

Cell parse_cell(const std::string& field, const Column& col, bool allow_suppressed,
                std::size_t row_number) {
  if (field.empty()) {
    if (allow_suppressed && col.role == Role::Sensitive) return Suppressed{};
    throw ValidationError("column '" + col.name + "', row " + std::to_string(row_number) +
                          ": empty value");
  }
  double v;
  if (csv::parse_number(field, v)) return v;
  if (col.kind == Kind::Numeric) {
    throw ValidationError("column '" + col.name + "', row " + std::to_string(row_number) +
                          ": non-numeric value '" + field + "'");
  }
  return field;
}

}  // namespace

Dataset parse_dataset_csv(const std::string& text, const AttributeSchema& schema,
                          const LoadOptions& options) {
  auto table = csv::parse(text);
  if (table.empty()) throw ValidationError("CSV file is empty");

  const auto& header = table.front();
  std::vector<std::string> expected;
  for (const Column& col : schema.columns()) expected.push_back(col.name);
  if (header != expected) {
    std::ostringstream msg;
    msg << "header mismatch;";
    for (const auto& name : expected) {
      if (std::find(header.begin(), header.end(), name) == header.end())
        msg << " missing column '" << name << "'";
    }
    for (const auto& name : header) {
      if (std::find(expected.begin(), expected.end(), name) == expected.end())
        msg << " extra column '" << name << "'";
    }
    if (msg.str() == "header mismatch;") msg << " columns out of order";
    throw ValidationError(msg.str());
  }
  if (table.size() == 1) throw ValidationError("dataset has no rows");

  std::vector<std::vector<Cell>> rows;
  rows.reserve(table.size() - 1);
  const std::size_t id_col = schema.identifier_index();
  for (std::size_t r = 1; r < table.size(); ++r) {
    const auto& record = table[r];
    if (record.size() != schema.size()) {
      throw ValidationError("row " + std::to_string(r) + " has " +
                            std::to_string(record.size()) + " fields, expected " +
                            std::to_string(schema.size()));
    }
    std::vector<Cell> cells;
    cells.reserve(record.size());
    for (std::size_t c = 0; c < record.size(); ++c) {
      if (c == id_col) {
        cells.emplace_back(record[c]);  // identifiers are opaque text keys
      } else {
        cells.push_back(parse_cell(record[c], schema.columns()[c],
                                   options.allow_suppressed_sensitive, r));
      }
    }
    rows.push_back(std::move(cells));
  }
  return Dataset(schema, std::move(rows));
}

Dataset load_dataset(const std::string& path, const AttributeSchema& schema,
                     const LoadOptions& options) {
  return parse_dataset_csv(csv::read_file(path), schema, options);
}

std::string dataset_to_csv(const Dataset& d) {
  std::string out;
  std::vector<std::string> fields;
  for (const Column& col : d.schema().columns()) fields.push_back(col.name);
  out += csv::serialize_row(fields);
  for (std::size_t r = 0; r < d.row_count(); ++r) {
    fields.clear();
    for (std::size_t c = 0; c < d.column_count(); ++c) {
      const Cell& cell = d.cell(r, c);
      if (is_suppressed(cell)) fields.emplace_back();
      else if (is_number(cell)) fields.push_back(csv::format_number(number_of(cell)));
      else fields.push_back(text_of(cell));
    }
    out += csv::serialize_row(fields);
  }
  return out;
}

void write_dataset_csv(const Dataset& d, const std::string& path) {
  csv::write_file(path, dataset_to_csv(d));
}

// --- normalization ----------------------------------------------------------

NormalizationParams NormalizationParams::fit(const Dataset& d) {
  NormalizationParams params;
  params.enabled_ = true;
  for (std::size_t c = 0; c < d.column_count(); ++c) {
    if (c == d.schema().identifier_index()) continue;
    bool all_numeric = true;
    double lo = 0.0, hi = 0.0;
    for (std::size_t r = 0; r < d.row_count(); ++r) {
      const Cell& cell = d.cell(r, c);
      if (!is_number(cell)) {
        all_numeric = false;
        break;
      }
      double v = number_of(cell);
      if (r == 0) lo = hi = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!all_numeric) continue;
    ColumnScale entry;
    entry.column = d.schema().columns()[c].name;
    entry.min = lo;
    entry.max = hi;
    entry.scaled = lo < hi;
    entry.constant = !(lo < hi);
    params.entries_.push_back(entry);
  }
  return params;
}

const ColumnScale* NormalizationParams::find(const std::string& column) const {
  for (const auto& entry : entries_) {
    if (entry.column == column) return &entry;
  }
  return nullptr;
}

double NormalizationParams::scale(const std::string& column, double x) const {
  if (!enabled_) return x;
  const ColumnScale* entry = find(column);
  if (!entry || !entry->scaled) return x;
  return (x - entry->min) / (entry->max - entry->min);
}

double NormalizationParams::invert(const std::string& column, double x) const {
  if (!enabled_) return x;
  const ColumnScale* entry = find(column);
  if (!entry || !entry->scaled) return x;
  return entry->min + x * (entry->max - entry->min);
}

Matrix NormalizationParams::scale_matrix(const Matrix& view) const {
  if (!enabled_) return view;
  Matrix out = view;
  for (std::size_t c = 0; c < view.cols; ++c) {
    const ColumnScale* entry = find(view.column_names[c]);
    if (!entry || !entry->scaled) continue;
    const double span = entry->max - entry->min;
    for (std::size_t r = 0; r < view.rows; ++r) {
      out.at(r, c) = (view.at(r, c) - entry->min) / span;
    }
  }
  return out;
}

std::pair<Dataset, NormalizationParams> normalize(const Dataset& d, bool enabled) {
  if (!enabled) return {d, NormalizationParams()};
  NormalizationParams params = NormalizationParams::fit(d);

  std::vector<std::vector<Cell>> rows;
  rows.reserve(d.row_count());
  for (std::size_t r = 0; r < d.row_count(); ++r) {
    std::vector<Cell> row;
    row.reserve(d.column_count());
    for (std::size_t c = 0; c < d.column_count(); ++c) {
      const Cell& cell = d.cell(r, c);
      const std::string& name = d.schema().columns()[c].name;
      if (is_number(cell)) row.emplace_back(params.scale(name, number_of(cell)));
      else row.push_back(cell);
    }
    rows.push_back(std::move(row));
  }

  // Scaled values live in [0,1]; the original universes no longer apply.
  std::vector<Column> columns = d.schema().columns();
  for (Column& col : columns) {
    const ColumnScale* entry = params.find(col.name);
    if (entry && entry->scaled) col.universe = Interval{0.0, 1.0};
  }
  AttributeSchema scaled_schema(std::move(columns), d.schema().normalize());
  return {Dataset(std::move(scaled_schema), std::move(rows)), params};
}

// --- views and joins ---------------------------------------------------------

Matrix numeric_view(const Dataset& d, const std::set<Role>& roles) {
  if (roles.empty()) throw ValidationError("numeric_view: empty role selection");
  auto indices = d.schema().role_indices(roles);
  indices.erase(std::remove(indices.begin(), indices.end(), d.schema().identifier_index()),
                indices.end());
  if (indices.empty()) throw ValidationError("numeric_view: no columns carry the requested roles");

  Matrix m = Matrix::zeros(d.row_count(), indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    m.column_names.push_back(d.schema().columns()[indices[c]].name);
  }
  for (std::size_t r = 0; r < d.row_count(); ++r) {
    for (std::size_t c = 0; c < indices.size(); ++c) {
      m.at(r, c) = d.numeric_cell(r, indices[c]);
    }
  }
  return m;
}

JoinedView join_on_identifier(const Dataset& left, const Dataset& aux) {
  if (left.schema().identifier().name != aux.schema().identifier().name) {
    throw ValidationError("join: identifier column names differ ('" +
                          left.schema().identifier().name + "' vs '" +
                          aux.schema().identifier().name + "')");
  }
  JoinedView view;
  view.left = &left;
  view.auxiliary = &aux;
  view.pairs.reserve(left.row_count());
  for (std::size_t r = 0; r < left.row_count(); ++r) {
    view.pairs.emplace_back(r, aux.row_of_identifier(left.identifier_of(r)));
  }
  return view;
}

}  // namespace fred
