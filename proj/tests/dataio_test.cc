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

#include <filesystem>
#include <random>

#include "cuelearn/error.h"
#include "cuelearn/tree_io.h"
#include "doctest.h"
#include "fixtures.h"

namespace cuelearn::dataio {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cuelearn_dataio_test";
  fs::create_directories(dir);
  return dir / name;
}

constexpr const char* kCore2Line =
    R"({"id":"r1","subset":"core2","cued":true,"cue_position":"on_core",)"
    R"("features":{"trib_pos":"B1A3-2after","inten_structure":"s1",)"
    R"("infor_structure":"s2","inten_rel":"convince","info_rel":"causality",)"
    R"("syn_rel":"coordinated","adjacency":true,"core_type":"action",)"
    R"("trib_type":"state","above":1,"below":0}})";

TEST_CASE("schema validation") {
  CHECK_THROWS_AS(AttributeSchema({discrete_attribute("x", {"a"}),
                                   discrete_attribute("x", {"b"})},
                                  "c", {"p"}),
                  InputError);
  CHECK_THROWS_AS(AttributeSchema({discrete_attribute("x", {})}, "c", {"p"}),
                  InputError);
  CHECK_THROWS_AS(AttributeSchema({discrete_attribute("x", {"a", "a"})}, "c",
                                  {"p"}),
                  InputError);
  CHECK_THROWS_AS(AttributeSchema({}, "c", {}), InputError);
  AttributeSchema ok({discrete_attribute("x", {"a", "b"}),
                      continuous_attribute("y")},
                     "c", {"p", "q"});
  CHECK(ok.find_attribute("y") == 1u);
  CHECK(ok.find_value(0, "b") == 1u);
  CHECK(ok.find_class("q") == 1u);
  Dataset ds(ok);
  CHECK_THROWS_AS(ds.add({{2, 0}, 0}), InputError);
  CHECK_THROWS_AS(ds.add({{0}, 0}), InputError);
  CHECK_THROWS_AS(ds.add({{0, 1}, 2}), InputError);
  ds.add({{kMissing, kMissing}, 1});
  CHECK(ds.size() == 1);
}

TEST_CASE("project and select_rows") {
  AttributeSchema schema({discrete_attribute("x", {"a", "b"}),
                          continuous_attribute("y"),
                          discrete_attribute("z", {"u"})},
                         "c", {"p", "q"});
  Dataset ds(schema, {{{0, 1.5, 0}, 0}, {{1, 2.5, 0}, 1}});
  const std::vector<std::string> names = {"z", "y"};
  const auto projected = project(ds, names);
  CHECK(projected.schema().attribute(0).name == "z");
  CHECK(projected.row(1).values == std::vector<double>{0, 2.5});
  const std::vector<std::string> unknown = {"w"};
  CHECK_THROWS_AS(project(ds, unknown), InputError);
  const std::vector<std::size_t> rows = {1};
  CHECK(select_rows(ds, rows).row(0).label == 1);
}

TEST_CASE("parse_corpus") {
  const auto one = parse_corpus(kCore2Line, "c.jsonl");
  REQUIRE(one.size() == 1);
  CHECK(one[0].features->trib_pos == corpus::TribPos(1, 3, 2, corpus::Side::kAfter));
  CHECK(one[0].features->syn_rel == corpus::SynRel::kCoordinated);

  std::string typo = kCore2Line;
  typo.replace(typo.find("core2"), 5, "corel");
  try {
    parse_corpus("\n" + typo, "c.jsonl");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("subset") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_corpus("{", "c.jsonl"), ParseError);
  CHECK_THROWS_AS(parse_corpus(std::string(kCore2Line) + "\n" + kCore2Line,
                               "c.jsonl"),
                  ParseError);
  std::string extra = kCore2Line;
  extra.insert(1, R"("colour":"red",)");
  CHECK_THROWS_AS(parse_corpus(extra, "c.jsonl"), ParseError);

  std::string raw = kCore2Line;
  raw.replace(raw.find("causality"), 9, "cause");
  CHECK_THROWS_AS(parse_corpus(raw, "c.jsonl"), ParseError);
  corpus::InfoRelationMap mapping({{"cause", corpus::InfoRel::kCausality}});
  CHECK(parse_corpus(raw, "c.jsonl", mapping)[0].features->info_rel ==
        corpus::InfoRel::kCausality);
  CHECK(parse_corpus("", "empty").empty());
  CHECK_THROWS_AS(read_corpus(scratch("does-not-exist.jsonl")), InputError);
}

TEST_CASE("corpus format round trips") {
  CHECK(format_corpus({}).empty());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto records = fixtures::random_corpus(rng);
    const auto text = format_corpus(records);
    CHECK(text == format_corpus(records));
    CHECK(parse_corpus(text, "mem") == records);
  }
  const auto records = fixtures::random_corpus(rng);
  write_corpus(records, scratch("c.jsonl"));
  CHECK(read_corpus(scratch("c.jsonl")) == records);
}

TEST_CASE("names and data") {
  const auto ds = parse_names_data("yes, no.\nwind: weak, strong.\n",
                                   "weak, yes.\n");
  CHECK(ds.size() == 1);
  CHECK(ds.schema().attribute(0).values ==
        std::vector<std::string>{"weak", "strong"});
  CHECK(ds.row(0).label == 0);

  const char* names = "| comment\nyes, no.\nwind: weak, strong.\nt: continuous.\n";
  CHECK_THROWS_AS(parse_names_data(names, "weak, 1, 2, yes.\n"), ParseError);
  CHECK_THROWS_AS(parse_names_data(names, "calm, 1, yes.\n"), ParseError);
  CHECK_THROWS_AS(parse_names_data(names, "weak, x, yes.\n"), ParseError);
  CHECK_THROWS_AS(parse_names_data(names, "weak, 1, maybe.\n"), ParseError);
  CHECK_THROWS_AS(parse_names_data("yes, no\n", ""), ParseError);
  const auto missing = parse_names_data(names, "?, ?, no.\n");
  CHECK(is_missing(missing.row(0).values[0]));
  CHECK(is_missing(missing.row(0).values[1]));

  AttributeSchema schema({continuous_attribute("t")}, "c", {"p"});
  const auto text = format_names_data(Dataset(schema));
  CHECK(text.data.empty());
  CHECK(text.names.find("t: continuous.") != std::string::npos);
}

TEST_CASE("names and data round trip") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto ds = fixtures::random_dataset(rng);
    const auto text = format_names_data(ds);
    CHECK(parse_names_data(text.names, text.data) == ds);
  }
  const auto ds = fixtures::random_dataset(rng);
  write_names_data(ds, scratch("d.names"), scratch("d.data"));
  CHECK(read_names_data(scratch("d.names"), scratch("d.data")) == ds);
}

TEST_CASE("tree JSON round trips") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const auto ds = fixtures::random_dataset(rng);
    if (ds.empty()) continue;
    const auto tree = induction::train(ds, {});
    const auto again = parse_tree_json(format_tree_json(tree));
    CHECK(format_tree_json(again) == format_tree_json(tree));
    for (const auto& row : ds.rows()) {
      CHECK(induction::classify(again, row.values).label ==
            induction::classify(tree, row.values).label);
    }
  }
  CHECK_THROWS_AS(parse_tree_json("{}"), InputError);
}

}  // namespace
}  // namespace cuelearn::dataio
