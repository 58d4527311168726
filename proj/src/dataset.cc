// Copyright 2026 The cuelearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cuelearn/dataset.h"

#include <algorithm>
#include <set>

#include "cuelearn/error.h"

namespace cuelearn {
namespace {

void require_unique(const std::vector<std::string>& items,
                    const std::string& what) {
  std::set<std::string_view> seen;
  for (const auto& item : items) {
    if (!seen.insert(item).second) {
      throw InputError("duplicate " + what + " '" + item + "'");
    }
  }
}

bool same_value(double a, double b) {
  return (is_missing(a) && is_missing(b)) || a == b;
}

}  // namespace

Attribute discrete_attribute(std::string name,
                             std::vector<std::string> values) {
  return Attribute{std::move(name), AttributeKind::kDiscrete,
                   std::move(values)};
}

Attribute continuous_attribute(std::string name) {
  return Attribute{std::move(name), AttributeKind::kContinuous, {}};
}

AttributeSchema::AttributeSchema(std::vector<Attribute> attributes,
                                 std::string class_name,
                                 std::vector<std::string> class_values)
    : attributes_(std::move(attributes)),
      class_name_(std::move(class_name)),
      class_values_(std::move(class_values)) {
  if (class_values_.empty()) throw InputError("empty class value set");
  require_unique(class_values_, "class value");
  std::vector<std::string> names;
  for (const auto& attribute : attributes_) {
    if (attribute.name.empty()) throw InputError("empty attribute name");
    names.push_back(attribute.name);
    if (attribute.discrete()) {
      if (attribute.values.empty()) {
        throw InputError("attribute '" + attribute.name +
                         "' has an empty value set");
      }
      require_unique(attribute.values,
                     "value of attribute '" + attribute.name + "'");
    } else if (!attribute.values.empty()) {
      throw InputError("continuous attribute '" + attribute.name +
                       "' declares values");
    }
  }
  require_unique(names, "attribute name");
}

std::optional<std::size_t> AttributeSchema::find_attribute(
    std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> AttributeSchema::find_value(
    std::size_t attribute, std::string_view value) const {
  const auto& values = attributes_.at(attribute).values;
  auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

std::optional<std::size_t> AttributeSchema::find_class(
    std::string_view value) const {
  auto it = std::find(class_values_.begin(), class_values_.end(), value);
  if (it == class_values_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - class_values_.begin());
}

Dataset::Dataset(AttributeSchema schema, std::vector<Example> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) check_row(rows_[i], i);
}

void Dataset::add(Example example) {
  check_row(example, rows_.size());
  rows_.push_back(std::move(example));
}

void Dataset::check_row(const Example& example, std::size_t index) const {
  const auto where = "row " + std::to_string(index) + ": ";
  if (example.values.size() != schema_.attribute_count()) {
    throw InputError(where + "expected " +
                     std::to_string(schema_.attribute_count()) +
                     " values, got " + std::to_string(example.values.size()));
  }
  if (example.label < 0 ||
      static_cast<std::size_t>(example.label) >= schema_.class_count()) {
    throw InputError(where + "class index out of range");
  }
  for (std::size_t a = 0; a < example.values.size(); ++a) {
    const double v = example.values[a];
    if (is_missing(v)) continue;
    const Attribute& attribute = schema_.attribute(a);
    if (std::isinf(v)) {
      throw InputError(where + "non-finite value for '" + attribute.name + "'");
    }
    if (attribute.discrete() &&
        (v < 0 || v != std::floor(v) ||
         v >= static_cast<double>(attribute.values.size()))) {
      throw InputError(where + "value index out of range for '" +
                       attribute.name + "'");
    }
  }
}

std::vector<int> Dataset::class_counts() const {
  std::vector<int> counts(schema_.class_count(), 0);
  for (const auto& row : rows_) ++counts[row.label];
  return counts;
}

bool operator==(const Dataset& a, const Dataset& b) {
  if (!(a.schema_ == b.schema_) || a.rows_.size() != b.rows_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    const auto& x = a.rows_[i];
    const auto& y = b.rows_[i];
    if (x.label != y.label || x.values.size() != y.values.size()) return false;
    for (std::size_t j = 0; j < x.values.size(); ++j) {
      if (!same_value(x.values[j], y.values[j])) return false;
    }
  }
  return true;
}

Dataset project(const Dataset& dataset, std::span<const std::string> names) {
  const auto& schema = dataset.schema();
  std::vector<std::size_t> columns;
  std::vector<Attribute> attributes;
  for (const auto& name : names) {
    auto index = schema.find_attribute(name);
    if (!index) throw InputError("unknown attribute '" + name + "'");
    columns.push_back(*index);
    attributes.push_back(schema.attribute(*index));
  }
  AttributeSchema projected(std::move(attributes), schema.class_name(),
                            schema.class_values());
  std::vector<Example> rows;
  rows.reserve(dataset.size());
  for (const auto& row : dataset.rows()) {
    Example example;
    example.label = row.label;
    example.values.reserve(columns.size());
    for (auto c : columns) example.values.push_back(row.values[c]);
    rows.push_back(std::move(example));
  }
  return Dataset(std::move(projected), std::move(rows));
}

Dataset select_rows(const Dataset& dataset, std::span<const std::size_t> rows) {
  std::vector<Example> selected;
  selected.reserve(rows.size());
  for (auto r : rows) selected.push_back(dataset.rows().at(r));
  return Dataset(dataset.schema(), std::move(selected));
}

}  // namespace cuelearn
