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

// File formats.
//
// Corpus files hold one JSON object per line:
//
//   {"id":"r1","subset":"core2","cued":true,"cue_position":"on_trib",
//    "features":{"trib_pos":"B1A0-1before", ..., "above":0,"below":2}}
//
// Cluster and joint records omit "features". Blank lines are skipped.
//
// Names/data pairs follow the C4.5 conventions: the names file starts with
// the class values ("cued, not_cued.") followed by one declaration per
// attribute ("name: v1, v2." or "name: continuous."); data rows list values
// in declaration order with the class last. '?' is a missing value and '|'
// starts a comment.

#ifndef CUELEARN_DATAIO_H_
#define CUELEARN_DATAIO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuelearn/corpus.h"
#include "cuelearn/dataset.h"

namespace cuelearn::dataio {

// Informational relations are passed through the mapping, so corpora may use
// raw relation labels. Throws ParseError (with file and line) on malformed
// lines, unknown enum values, or duplicate ids; InputError if the file cannot
// be opened.
std::vector<corpus::RelationRecord> read_corpus(
    const std::filesystem::path& path,
    const corpus::InfoRelationMap& mapping =
        corpus::InfoRelationMap::identity());

// Parses corpus text that did not come from a file; `source` names it in
// error messages.
std::vector<corpus::RelationRecord> parse_corpus(
    std::string_view text, const std::string& source,
    const corpus::InfoRelationMap& mapping =
        corpus::InfoRelationMap::identity());

std::string format_corpus(std::span<const corpus::RelationRecord> records);
void write_corpus(std::span<const corpus::RelationRecord> records,
                  const std::filesystem::path& path);

// Mapping files are JSON objects from raw label to class name.
corpus::InfoRelationMap read_info_relation_map(
    const std::filesystem::path& path);

Dataset read_names_data(const std::filesystem::path& names_path,
                        const std::filesystem::path& data_path);
Dataset parse_names_data(std::string_view names_text,
                         std::string_view data_text,
                         const std::string& names_source = "<names>",
                         const std::string& data_source = "<data>");

struct NamesDataText {
  std::string names;
  std::string data;
};

// Throws InputError for tokens the format cannot represent (empty, or
// containing ',', ':', '|', '?', line breaks, surrounding spaces, or a
// trailing '.').
NamesDataText format_names_data(const Dataset& dataset);
void write_names_data(const Dataset& dataset,
                      const std::filesystem::path& names_path,
                      const std::filesystem::path& data_path);

// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

// Whole-file helpers shared by the CLI.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cuelearn::dataio

#endif  // CUELEARN_DATAIO_H_
