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

#include "cuelearn/tree_io.h"

#include "cuelearn/dataio.h"
#include "cuelearn/error.h"

namespace cuelearn::dataio {
namespace {

using induction::DecisionTree;
using induction::SplitTest;
using induction::TreeNode;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kTreeFormatVersion = 1;

ordered_json node_to_json(const TreeNode& node, const AttributeSchema& schema) {
  ordered_json out;
  out["label"] = schema.class_values()[node.label];
  out["counts"] = node.class_counts;
  if (node.is_leaf()) return out;
  const auto& test = *node.test;
  ordered_json t;
  t["attribute"] = schema.attribute(test.attribute()).name;
  if (test.is_grouped()) {
    t["kind"] = "grouped";
    ordered_json groups = ordered_json::array();
    const auto& values = schema.attribute(test.attribute()).values;
    for (const auto& members : test.group_members()) {
      ordered_json group = ordered_json::array();
      for (int v : members) group.push_back(values[v]);
      groups.push_back(std::move(group));
    }
    t["groups"] = std::move(groups);
  } else {
    t["kind"] = "threshold";
    t["cut"] = test.cut();
  }
  out["test"] = std::move(t);
  ordered_json children = ordered_json::array();
  for (const auto& child : node.children) {
    children.push_back(node_to_json(child, schema));
  }
  out["children"] = std::move(children);
  return out;
}

TreeNode node_from_json(const json& in, const AttributeSchema& schema) {
  TreeNode node;
  auto label = schema.find_class(in.at("label").get<std::string>());
  if (!label) throw InputError("tree: unknown class label");
  node.label = static_cast<int>(*label);
  node.class_counts = in.at("counts").get<std::vector<int>>();
  if (node.class_counts.size() != schema.class_count()) {
    throw InputError("tree: class count vector has wrong length");
  }
  for (int c : node.class_counts) {
    if (c < 0) throw InputError("tree: negative class count");
  }
  auto test_it = in.find("test");
  if (test_it == in.end()) return node;

  const auto& t = *test_it;
  const auto name = t.at("attribute").get<std::string>();
  auto attribute = schema.find_attribute(name);
  if (!attribute) throw InputError("tree: unknown attribute '" + name + "'");
  const auto kind = t.at("kind").get<std::string>();
  if (kind == "grouped") {
    const auto& declared = schema.attribute(*attribute);
    if (!declared.discrete()) {
      throw InputError("tree: grouped test on continuous '" + name + "'");
    }
    std::vector<int> groups(declared.values.size(), -1);
    const auto& listed = t.at("groups");
    for (std::size_t g = 0; g < listed.size(); ++g) {
      for (const auto& value : listed[g]) {
        auto v = schema.find_value(*attribute, value.get<std::string>());
        if (!v || groups[*v] != -1) {
          throw InputError("tree: bad group member for '" + name + "'");
        }
        groups[*v] = static_cast<int>(g);
      }
    }
    for (int g : groups) {
      if (g < 0) throw InputError("tree: groups do not cover '" + name + "'");
    }
    try {
      node.test = SplitTest::grouped(*attribute, std::move(groups));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("tree: ") + e.what());
    }
  } else if (kind == "threshold") {
    if (schema.attribute(*attribute).discrete()) {
      throw InputError("tree: threshold test on discrete '" + name + "'");
    }
    node.test = SplitTest::threshold(*attribute, t.at("cut").get<double>());
  } else {
    throw InputError("tree: unknown test kind '" + kind + "'");
  }
  const auto& children = in.at("children");
  if (static_cast<int>(children.size()) != node.test->branch_count()) {
    throw InputError("tree: child count does not match branch count");
  }
  for (const auto& child : children) {
    node.children.push_back(node_from_json(child, schema));
  }
  return node;
}

void render(const TreeNode& node, const AttributeSchema& schema, int indent,
            std::string& out) {
  const auto& test = *node.test;
  const auto& attribute = schema.attribute(test.attribute());
  const auto members = test.is_grouped() ? test.group_members()
                                         : std::vector<std::vector<int>>{};
  for (std::size_t b = 0; b < node.children.size(); ++b) {
    for (int i = 0; i < indent; ++i) out += "|   ";
    out += attribute.name;
    if (test.is_grouped()) {
      out += " in {";
      for (std::size_t m = 0; m < members[b].size(); ++m) {
        out += (m ? ", " : "") + attribute.values[members[b][m]];
      }
      out += "}";
    } else {
      out += (b == 0 ? " <= " : " > ") + format_number(test.cut());
    }
    const auto& child = node.children[b];
    if (child.is_leaf()) {
      out += ": " + schema.class_values()[child.label] + " (" +
             std::to_string(child.count()) + "/" +
             std::to_string(child.errors()) + ")\n";
    } else {
      out += ":\n";
      render(child, schema, indent + 1, out);
    }
  }
}

}  // namespace

ordered_json schema_to_json(const AttributeSchema& schema) {
  ordered_json out;
  out["class"] = schema.class_name();
  out["classes"] = schema.class_values();
  ordered_json attributes = ordered_json::array();
  for (const auto& attribute : schema.attributes()) {
    ordered_json a;
    a["name"] = attribute.name;
    a["kind"] = attribute.discrete() ? "discrete" : "continuous";
    if (attribute.discrete()) a["values"] = attribute.values;
    attributes.push_back(std::move(a));
  }
  out["attributes"] = std::move(attributes);
  return out;
}

AttributeSchema schema_from_json(const json& in) {
  std::vector<Attribute> attributes;
  for (const auto& a : in.at("attributes")) {
    const auto kind = a.at("kind").get<std::string>();
    if (kind == "discrete") {
      attributes.push_back(discrete_attribute(
          a.at("name").get<std::string>(),
          a.at("values").get<std::vector<std::string>>()));
    } else if (kind == "continuous") {
      attributes.push_back(continuous_attribute(a.at("name").get<std::string>()));
    } else {
      throw InputError("unknown attribute kind '" + kind + "'");
    }
  }
  return AttributeSchema(std::move(attributes), in.at("class").get<std::string>(),
                         in.at("classes").get<std::vector<std::string>>());
}

ordered_json params_to_json(const induction::LearnerParams& params) {
  ordered_json out;
  out["grouping"] = params.grouping;
  out["min_branch_instances"] = params.min_branch_instances;
  out["cf"] = params.cf;
  out["gain_guard"] = params.gain_guard;
  return out;
}

induction::LearnerParams params_from_json(const json& in) {
  induction::LearnerParams params;
  params.grouping = in.at("grouping").get<bool>();
  params.min_branch_instances = in.at("min_branch_instances").get<int>();
  params.cf = in.at("cf").get<double>();
  params.gain_guard = in.at("gain_guard").get<bool>();
  return params;
}

std::string format_tree_json(const DecisionTree& tree) {
  ordered_json out;
  out["version"] = kTreeFormatVersion;
  out["schema"] = schema_to_json(tree.schema);
  out["params"] = params_to_json(tree.params);
  out["root"] = node_to_json(tree.root, tree.schema);
  return out.dump(2) + "\n";
}

DecisionTree parse_tree_json(std::string_view text) {
  try {
    const auto in = json::parse(text);
    if (in.at("version").get<int>() != kTreeFormatVersion) {
      throw InputError("unsupported tree format version");
    }
    auto schema = schema_from_json(in.at("schema"));
    auto params = params_from_json(in.at("params"));
    auto root = node_from_json(in.at("root"), schema);
    return DecisionTree{std::move(schema), params, std::move(root)};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed tree: ") + e.what());
  }
}

std::string format_tree_text(const DecisionTree& tree) {
  std::string out;
  if (tree.root.is_leaf()) {
    out = tree.schema.class_values()[tree.root.label] + " (" +
          std::to_string(tree.root.count()) + "/" +
          std::to_string(tree.root.errors()) + ")\n";
    return out;
  }
  render(tree.root, tree.schema, 0, out);
  return out;
}

}  // namespace cuelearn::dataio
