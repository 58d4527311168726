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

#ifndef CUELEARN_TREE_IO_H_
#define CUELEARN_TREE_IO_H_

#include <string>
#include <string_view>

#include "cuelearn/induction.h"
#include "json.hpp"

namespace cuelearn::dataio {

nlohmann::ordered_json schema_to_json(const AttributeSchema& schema);
AttributeSchema schema_from_json(const nlohmann::json& value);

nlohmann::ordered_json params_to_json(const induction::LearnerParams& params);
induction::LearnerParams params_from_json(const nlohmann::json& value);

// Tree files are single JSON objects with a "version" field.
std::string format_tree_json(const induction::DecisionTree& tree);
// Throws InputError on malformed input.
induction::DecisionTree parse_tree_json(std::string_view text);

// Indented rendering in the style of C4.5 output; leaves show
// "class (n/errors)".
std::string format_tree_text(const induction::DecisionTree& tree);

}  // namespace cuelearn::dataio

#endif  // CUELEARN_TREE_IO_H_
