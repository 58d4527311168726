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

// Generic learning view of a table of examples.
//
// A row stores one double per attribute. Discrete attributes hold the index
// of the value in the attribute's declared value list; continuous attributes
// hold the value itself. A quiet NaN marks a missing value in either kind.
// Class labels are indices into the class value list and are never missing.

#ifndef CUELEARN_DATASET_H_
#define CUELEARN_DATASET_H_

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cuelearn {

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double value) { return std::isnan(value); }

enum class AttributeKind { kDiscrete, kContinuous };

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::kDiscrete;
  // Declared values; empty for continuous attributes.
  std::vector<std::string> values;

  bool discrete() const { return kind == AttributeKind::kDiscrete; }
  bool operator==(const Attribute&) const = default;
};

Attribute discrete_attribute(std::string name, std::vector<std::string> values);
Attribute continuous_attribute(std::string name);

class AttributeSchema {
 public:
  // Throws InputError on duplicate names, empty discrete value lists,
  // duplicate values within a list, or an empty class value list.
  AttributeSchema(std::vector<Attribute> attributes, std::string class_name,
                  std::vector<std::string> class_values);

  const std::vector<Attribute>& attributes() const { return attributes_; }
  const Attribute& attribute(std::size_t index) const {
    return attributes_[index];
  }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::string& class_name() const { return class_name_; }
  const std::vector<std::string>& class_values() const {
    return class_values_;
  }
  std::size_t class_count() const { return class_values_.size(); }

  std::optional<std::size_t> find_attribute(std::string_view name) const;
  std::optional<std::size_t> find_value(std::size_t attribute,
                                        std::string_view value) const;
  std::optional<std::size_t> find_class(std::string_view value) const;

  bool operator==(const AttributeSchema&) const = default;

 private:
  std::vector<Attribute> attributes_;
  std::string class_name_;
  std::vector<std::string> class_values_;
};

struct Example {
  std::vector<double> values;
  int label = 0;
};

class Dataset {
 public:
  explicit Dataset(AttributeSchema schema) : schema_(std::move(schema)) {}
  // Throws InputError if any row does not conform to the schema.
  Dataset(AttributeSchema schema, std::vector<Example> rows);

  const AttributeSchema& schema() const { return schema_; }
  const std::vector<Example>& rows() const { return rows_; }
  const Example& row(std::size_t index) const { return rows_[index]; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  // Appends after checking conformance.
  void add(Example example);

  // Per-class row counts over the whole dataset.
  std::vector<int> class_counts() const;

  // Equality treats missing values as equal to each other.
  friend bool operator==(const Dataset& a, const Dataset& b);

 private:
  void check_row(const Example& example, std::size_t index) const;

  AttributeSchema schema_;
  std::vector<Example> rows_;
};

// A dataset restricted to the named attributes, in the order given.
// Throws InputError for unknown names.
Dataset project(const Dataset& dataset, std::span<const std::string> names);

// A dataset holding the selected rows, in the order given.
Dataset select_rows(const Dataset& dataset, std::span<const std::size_t> rows);

}  // namespace cuelearn

#endif  // CUELEARN_DATASET_H_
