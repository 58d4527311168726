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

#include "cuelearn/dataio.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cuelearn/error.h"
#include "json.hpp"

namespace cuelearn::dataio {
namespace {

using corpus::RelationFeatures;
using corpus::RelationRecord;
using nlohmann::json;
using nlohmann::ordered_json;

// Splits text into lines, dropping a trailing '\r' from each.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(s.substr(start)));
      break;
    }
    fields.push_back(trim(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

// --- corpus records -------------------------------------------------------

class LineReader {
 public:
  LineReader(const std::string& source, std::size_t line)
      : source_(source), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source_, line_, message);
  }

  const json& member(const json& object, const char* key) const {
    auto it = object.find(key);
    if (it == object.end()) fail(std::string("missing field '") + key + "'");
    return *it;
  }

  std::string string_field(const json& object, const char* key) const {
    const auto& value = member(object, key);
    if (!value.is_string()) fail(std::string("field '") + key + "' must be a string");
    return value.get<std::string>();
  }

  bool bool_field(const json& object, const char* key) const {
    const auto& value = member(object, key);
    if (!value.is_boolean()) fail(std::string("field '") + key + "' must be a boolean");
    return value.get<bool>();
  }

  int count_field(const json& object, const char* key) const {
    const auto& value = member(object, key);
    if (!value.is_number_integer() || value.get<long long>() < 0 ||
        value.get<long long>() > 1'000'000) {
      fail(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return value.get<int>();
  }

  template <typename Enum, typename Parser>
  Enum enum_field(const json& object, const char* key, Parser parse) const {
    const auto text = string_field(object, key);
    auto value = parse(text);
    if (!value) fail(std::string("field '") + key + "': unknown value '" + text + "'");
    return *value;
  }

  void only_keys(const json& object,
                 std::initializer_list<std::string_view> allowed,
                 const char* what) const {
    for (const auto& item : object.items()) {
      bool known = false;
      for (auto key : allowed) known = known || key == item.key();
      if (!known) fail(std::string("unknown ") + what + " field '" + item.key() + "'");
    }
  }

 private:
  const std::string& source_;
  std::size_t line_;
};

RelationFeatures parse_features(const json& object, const LineReader& reader,
                                const corpus::InfoRelationMap& mapping) {
  if (!object.is_object()) reader.fail("field 'features' must be an object");
  reader.only_keys(object,
                   {"trib_pos", "inten_structure", "infor_structure",
                    "inten_rel", "info_rel", "syn_rel", "adjacency",
                    "core_type", "trib_type", "above", "below"},
                   "features");
  RelationFeatures f;
  try {
    f.trib_pos = corpus::parse_trib_pos(reader.string_field(object, "trib_pos"));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    reader.fail(std::string("field 'trib_pos': ") + e.what());
  }
  f.inten_structure = reader.string_field(object, "inten_structure");
  f.infor_structure = reader.string_field(object, "infor_structure");
  f.inten_rel = reader.enum_field<corpus::IntenRel>(object, "inten_rel",
                                                    corpus::parse_inten_rel);
  const auto raw_info = reader.string_field(object, "info_rel");
  try {
    f.info_rel = corpus::map_info_relation(raw_info, mapping);
  } catch (const InputError& e) {
    reader.fail(std::string("field 'info_rel': ") + e.what());
  }
  f.syn_rel = reader.enum_field<corpus::SynRel>(object, "syn_rel",
                                                corpus::parse_syn_rel);
  f.adjacency = reader.bool_field(object, "adjacency");
  f.core_type = reader.enum_field<corpus::UnitType>(object, "core_type",
                                                    corpus::parse_unit_type);
  f.trib_type = reader.enum_field<corpus::UnitType>(object, "trib_type",
                                                    corpus::parse_unit_type);
  f.above = reader.count_field(object, "above");
  f.below = reader.count_field(object, "below");
  return f;
}

ordered_json features_to_json(const RelationFeatures& f) {
  ordered_json out;
  out["trib_pos"] = corpus::format_trib_pos(f.trib_pos);
  out["inten_structure"] = f.inten_structure;
  out["infor_structure"] = f.infor_structure;
  out["inten_rel"] = corpus::to_string(f.inten_rel);
  out["info_rel"] = corpus::to_string(f.info_rel);
  out["syn_rel"] = corpus::to_string(f.syn_rel);
  out["adjacency"] = f.adjacency;
  out["core_type"] = corpus::to_string(f.core_type);
  out["trib_type"] = corpus::to_string(f.trib_type);
  out["above"] = f.above;
  out["below"] = f.below;
  return out;
}

// --- names/data -----------------------------------------------------------

std::string_view strip_comment(std::string_view line) {
  auto bar = line.find('|');
  if (bar != std::string_view::npos) line = line.substr(0, bar);
  return trim(line);
}

// Removes the terminating period of a declaration; required when `required`.
bool strip_period(std::string_view& text) {
  if (!text.empty() && text.back() == '.') {
    text.remove_suffix(1);
    text = trim(text);
    return true;
  }
  return false;
}

void check_token(std::string_view token, const std::string& what) {
  auto bad = [&](const std::string& why) {
    throw InputError("cannot write " + what + " '" + std::string(token) +
                     "': " + why);
  };
  if (token.empty()) bad("empty");
  if (token.find_first_of(",:|?\n\r") != std::string_view::npos) {
    bad("contains a reserved character");
  }
  if (trim(token) != token) bad("surrounding whitespace");
  if (token.back() == '.') bad("trailing period");
}

std::vector<std::string> to_strings(const std::vector<std::string_view>& views) {
  return {views.begin(), views.end()};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

std::string format_number(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::vector<RelationRecord> parse_corpus(std::string_view text,
                                         const std::string& source,
                                         const corpus::InfoRelationMap& mapping) {
  std::vector<RelationRecord> records;
  std::set<std::string> ids;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const LineReader reader(source, i + 1);
    json object;
    try {
      object = json::parse(lines[i]);
    } catch (const json::parse_error& e) {
      reader.fail(std::string("invalid JSON: ") + e.what());
    }
    if (!object.is_object()) reader.fail("record must be a JSON object");
    reader.only_keys(object, {"id", "subset", "cued", "cue_position", "features"},
                     "record");

    RelationRecord record;
    record.id = reader.string_field(object, "id");
    if (record.id.empty()) reader.fail("field 'id' is empty");
    if (!ids.insert(record.id).second) {
      reader.fail("duplicate id '" + record.id + "'");
    }
    record.subset = reader.enum_field<corpus::Subset>(object, "subset",
                                                      corpus::parse_subset);
    record.cued = reader.bool_field(object, "cued");
    record.cue_position = reader.enum_field<corpus::CuePosition>(
        object, "cue_position", corpus::parse_cue_position);
    if (auto it = object.find("features"); it != object.end()) {
      record.features = parse_features(*it, reader, mapping);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<RelationRecord> read_corpus(const std::filesystem::path& path,
                                        const corpus::InfoRelationMap& mapping) {
  return parse_corpus(read_text_file(path), path.string(), mapping);
}

std::string format_corpus(std::span<const RelationRecord> records) {
  std::string out;
  for (const auto& record : records) {
    ordered_json line;
    line["id"] = record.id;
    line["subset"] = corpus::to_string(record.subset);
    line["cued"] = record.cued;
    line["cue_position"] = corpus::to_string(record.cue_position);
    if (record.features) line["features"] = features_to_json(*record.features);
    out += line.dump();
    out += '\n';
  }
  return out;
}

void write_corpus(std::span<const RelationRecord> records,
                  const std::filesystem::path& path) {
  write_text_file(path, format_corpus(records));
}

corpus::InfoRelationMap read_info_relation_map(
    const std::filesystem::path& path) {
  json object;
  try {
    object = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw InputError("mapping '" + path.string() + "': " + e.what());
  }
  if (!object.is_object()) {
    throw InputError("mapping '" + path.string() + "' must be a JSON object");
  }
  std::map<std::string, corpus::InfoRel> table;
  for (const auto& item : object.items()) {
    if (!item.value().is_string()) {
      throw InputError("mapping entry '" + item.key() + "' must be a string");
    }
    auto value = corpus::parse_info_rel(item.value().get<std::string>());
    if (!value) {
      throw InputError("mapping entry '" + item.key() +
                       "' names an unknown class '" +
                       item.value().get<std::string>() + "'");
    }
    table.emplace(item.key(), *value);
  }
  return corpus::InfoRelationMap(std::move(table));
}

Dataset parse_names_data(std::string_view names_text, std::string_view data_text,
                         const std::string& names_source,
                         const std::string& data_source) {
  std::vector<std::string> class_values;
  std::vector<Attribute> attributes;
  std::size_t class_line = 0;
  const auto names_lines = split_lines(names_text);
  for (std::size_t i = 0; i < names_lines.size(); ++i) {
    auto line = strip_comment(names_lines[i]);
    if (line.empty()) continue;
    auto fail = [&](const std::string& message) {
      throw ParseError(names_source, i + 1, message);
    };
    if (!strip_period(line)) fail("declaration must end with '.'");
    if (class_line == 0) {
      class_line = i + 1;
      class_values = to_strings(split_fields(line));
      if (class_values.size() == 1 && class_values[0].empty()) {
        fail("empty class set");
      }
      for (const auto& value : class_values) {
        if (value.empty()) fail("empty class value");
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected 'name: values.'");
    const auto name = std::string(trim(line.substr(0, colon)));
    const auto body = trim(line.substr(colon + 1));
    if (name.empty()) fail("empty attribute name");
    if (body == "continuous") {
      attributes.push_back(continuous_attribute(name));
      continue;
    }
    auto values = to_strings(split_fields(body));
    for (const auto& value : values) {
      if (value.empty()) fail("empty value in declaration of '" + name + "'");
    }
    attributes.push_back(discrete_attribute(name, std::move(values)));
  }
  if (class_line == 0) throw ParseError(names_source, 1, "empty class set");

  auto schema = [&] {
    try {
      return AttributeSchema(std::move(attributes), "class",
                             std::move(class_values));
    } catch (const InputError& e) {
      throw ParseError(names_source, class_line, e.what());
    }
  }();

  Dataset dataset(schema);
  const auto data_lines = split_lines(data_text);
  for (std::size_t i = 0; i < data_lines.size(); ++i) {
    auto line = strip_comment(data_lines[i]);
    if (line.empty()) continue;
    auto fail = [&](const std::string& message) {
      throw ParseError(data_source, i + 1, message);
    };
    strip_period(line);
    const auto fields = split_fields(line);
    if (fields.size() != schema.attribute_count() + 1) {
      fail("expected " + std::to_string(schema.attribute_count() + 1) +
           " fields, got " + std::to_string(fields.size()));
    }
    Example example;
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
      const auto field = fields[a];
      const auto& attribute = schema.attribute(a);
      if (field == "?") {
        example.values.push_back(kMissing);
      } else if (attribute.discrete()) {
        auto index = schema.find_value(a, field);
        if (!index) {
          fail("value '" + std::string(field) + "' not declared for '" +
               attribute.name + "'");
        }
        example.values.push_back(static_cast<double>(*index));
      } else {
        double value = 0;
        auto [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size() ||
            !std::isfinite(value)) {
          fail("bad number '" + std::string(field) + "' for '" +
               attribute.name + "'");
        }
        example.values.push_back(value);
      }
    }
    auto label = schema.find_class(fields.back());
    if (!label) fail("unknown class '" + std::string(fields.back()) + "'");
    example.label = static_cast<int>(*label);
    dataset.add(std::move(example));
  }
  return dataset;
}

Dataset read_names_data(const std::filesystem::path& names_path,
                        const std::filesystem::path& data_path) {
  return parse_names_data(read_text_file(names_path),
                          read_text_file(data_path), names_path.string(),
                          data_path.string());
}

NamesDataText format_names_data(const Dataset& dataset) {
  const auto& schema = dataset.schema();
  NamesDataText out;
  for (std::size_t c = 0; c < schema.class_count(); ++c) {
    check_token(schema.class_values()[c], "class value");
    out.names += (c ? ", " : "") + schema.class_values()[c];
  }
  out.names += ".\n";
  for (const auto& attribute : schema.attributes()) {
    check_token(attribute.name, "attribute name");
    out.names += attribute.name + ": ";
    if (!attribute.discrete()) {
      out.names += "continuous.\n";
      continue;
    }
    for (std::size_t v = 0; v < attribute.values.size(); ++v) {
      check_token(attribute.values[v], "value");
      if (attribute.values[v] == "continuous" && attribute.values.size() == 1) {
        throw InputError("cannot write single-valued attribute '" +
                         attribute.name + "' with value 'continuous'");
      }
      out.names += (v ? ", " : "") + attribute.values[v];
    }
    out.names += ".\n";
  }
  for (const auto& row : dataset.rows()) {
    for (std::size_t a = 0; a < row.values.size(); ++a) {
      const double v = row.values[a];
      if (is_missing(v)) {
        out.data += "?";
      } else if (schema.attribute(a).discrete()) {
        out.data += schema.attribute(a).values[static_cast<std::size_t>(v)];
      } else {
        out.data += format_number(v);
      }
      out.data += ", ";
    }
    out.data += schema.class_values()[row.label];
    out.data += '\n';
  }
  return out;
}

void write_names_data(const Dataset& dataset,
                      const std::filesystem::path& names_path,
                      const std::filesystem::path& data_path) {
  const auto text = format_names_data(dataset);
  write_text_file(names_path, text.names);
  write_text_file(data_path, text.data);
}

}  // namespace cuelearn::dataio
