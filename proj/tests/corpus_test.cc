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

#include "cuelearn/corpus.h"

#include <random>
#include <set>

#include "cuelearn/error.h"
#include "cuelearn/synth.h"
#include "doctest.h"
#include "fixtures.h"

namespace cuelearn::corpus {
namespace {

RelationRecord record(std::string id, Subset subset, bool cued,
                      CuePosition position) {
  RelationRecord r;
  r.id = std::move(id);
  r.subset = subset;
  r.cued = cued;
  r.cue_position = position;
  if (is_core_contributor(subset)) r.features = RelationFeatures{};
  return r;
}

TEST_CASE("trib_pos labels") {
  const auto p = parse_trib_pos("B1A3-2after");
  CHECK(p == TribPos(1, 3, 2, Side::kAfter));
  CHECK(parse_trib_pos("B0A1-1after") == TribPos(0, 1, 1, Side::kAfter));
  CHECK_THROWS_AS(parse_trib_pos("B2A0-3before"), InputError);
  CHECK(format_trib_pos(TribPos(1, 3, 2, Side::kAfter)) == "B1A3-2after");
  CHECK(format_trib_pos(TribPos(0, 1, 1, Side::kAfter)) == "B0A1-1after");
  for (const char* bad : {"", "B", "A1B2-1after", "B1A2-1", "B1A2-1later",
                          "B1A2-0after", "B0A0-1after", "b1A2-1after",
                          "B1A2--1after", "B1A2-1after ", "B-1A2-1after"}) {
    CHECK_THROWS_AS(parse_trib_pos(bad), InputError);
  }
}

TEST_CASE("trib_pos round trips exhaustively") {
  int checked = 0;
  for (int before = 0; before <= 6; ++before) {
    for (int after = 0; after <= 6; ++after) {
      if (before + after == 0) continue;
      for (Side side : {Side::kBefore, Side::kAfter}) {
        const int count = side == Side::kBefore ? before : after;
        for (int index = 1; index <= count; ++index) {
          const TribPos pos(before, after, index, side);
          CHECK(parse_trib_pos(format_trib_pos(pos)) == pos);
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 294);
}

TEST_CASE("enum names") {
  for (Subset s : kAllSubsets) CHECK(parse_subset(to_string(s)) == s);
  CHECK_FALSE(parse_subset("corel").has_value());
  CHECK(to_string(SynRel::kTribSubordinateToCore) == "trib_subordinate_to_core");
  CHECK(parse_cue_position("on_trib") == CuePosition::kOnTrib);
  CHECK(parse_info_rel("temporal") == InfoRel::kTemporal);
  CHECK(parse_unit_type("matrix") == UnitType::kMatrix);
  CHECK(parse_inten_rel("concede") == IntenRel::kConcede);
  CHECK(parse_target("placement") == Target::kPlacement);
}

TEST_CASE("validate_corpus single-rule fixtures") {
  CHECK(validate_corpus({}).empty());

  std::vector<RelationRecord> on_core = {
      record("a", Subset::kCore1, true, CuePosition::kOnCore)};
  CHECK(validate_corpus(on_core) ==
        std::vector<Violation>{{"a", std::string(rules::kCoreFirstOnCore)}});

  auto temporal = record("b", Subset::kCore2, false, CuePosition::kNone);
  temporal.features->info_rel = InfoRel::kTemporal;
  CHECK(validate_corpus(std::vector{temporal}) ==
        std::vector<Violation>{
            {"b", std::string(rules::kTemporalOutsideClusters)}});

  std::vector<RelationRecord> inconsistent = {
      record("c", Subset::kCore2, true, CuePosition::kNone)};
  CHECK(validate_corpus(inconsistent) ==
        std::vector<Violation>{{"c", std::string(rules::kCuedPosition)}});

  std::vector<RelationRecord> implicit = {
      record("d", Subset::kImplicitCore, true, CuePosition::kOnCore)};
  CHECK(validate_corpus(implicit) ==
        std::vector<Violation>{{"d", std::string(rules::kImplicitOnCore)}});

  auto bare = record("e", Subset::kCore1, false, CuePosition::kNone);
  bare.features.reset();
  auto extra = record("f", Subset::kCluster, true, CuePosition::kOnTrib);
  extra.features = RelationFeatures{};
  auto negative = record("g", Subset::kCore2, false, CuePosition::kNone);
  negative.features->above = -1;
  auto duplicate = record("e", Subset::kJoint, false, CuePosition::kNone);
  CHECK(validate_corpus(std::vector{bare, extra, negative, duplicate}) ==
        std::vector<Violation>{
            {"e", std::string(rules::kMissingFeatures)},
            {"f", std::string(rules::kUnexpectedFeatures)},
            {"g", std::string(rules::kNegativeEmbedding)},
            {"e", std::string(rules::kDuplicateId)}});
}

TEST_CASE("partition and placement subsets") {
  const auto empty = partition_by_subset({});
  for (Subset s : kAllSubsets) CHECK(empty[s].empty());

  const auto corpus = synth::generate_corpus(synth::default_spec());
  CHECK(validate_corpus(corpus).empty());
  const auto parts = partition_by_subset(corpus);
  CHECK(parts[Subset::kCore1].size() == 127);
  CHECK(parts[Subset::kCore2].size() == 155);
  CHECK(parts[Subset::kImplicitCore].size() == 124);
  CHECK(parts[Subset::kJoint].size() == 64);
  CHECK(parts[Subset::kCluster].size() == 310);

  const auto placement = placement_subset(parts[Subset::kCore2]);
  CHECK(placement.size() == 100);
  int on_trib = 0;
  for (const auto& r : placement) on_trib += r.cue_position == CuePosition::kOnTrib;
  CHECK(on_trib == 43);
  std::vector<RelationRecord> none = {
      record("x", Subset::kCore2, false, CuePosition::kNone)};
  CHECK(placement_subset(none).empty());
  CHECK_THROWS_AS(placement_subset(parts[Subset::kCore1]), InputError);
}

TEST_CASE("to_learning_dataset") {
  std::vector<RelationRecord> one = {
      record("a", Subset::kCore2, true, CuePosition::kOnTrib)};
  const auto ds = to_learning_dataset(one, Target::kOccurrence);
  CHECK(ds.size() == 1);
  CHECK(ds.schema().class_values()[ds.row(0).label] == "cued");
  CHECK(ds.schema().attribute_count() == 11);
  CHECK_FALSE(ds.schema().attribute(9).discrete());

  const auto corpus = synth::generate_corpus(synth::default_spec());
  const auto parts = partition_by_subset(corpus);
  const auto core1 = to_learning_dataset(parts[Subset::kCore1], Target::kOccurrence);
  CHECK(core1.class_counts()[*core1.schema().find_class("cued")] == 52);

  // Value lists are exactly the observed values.
  for (std::size_t a = 0; a < 9; ++a) {
    std::set<std::string> seen;
    for (const auto& r : parts[Subset::kCore1]) {
      seen.insert(feature_value(*r.features, kFeatureNames[a]));
    }
    const auto& declared = core1.schema().attribute(a).values;
    CHECK(std::set<std::string>(declared.begin(), declared.end()) == seen);
  }

  std::vector<RelationRecord> uncued = {
      record("b", Subset::kCore2, false, CuePosition::kNone)};
  CHECK_THROWS_AS(to_learning_dataset(uncued, Target::kPlacement), InputError);
  std::vector<RelationRecord> cluster = {
      record("c", Subset::kCluster, true, CuePosition::kOnTrib)};
  CHECK_THROWS_AS(to_learning_dataset(cluster, Target::kOccurrence), InputError);
}

TEST_CASE("informational relation mapping") {
  InfoRelationMap table({{"cause", InfoRel::kCausality}});
  CHECK(map_info_relation("cause", table) == InfoRel::kCausality);
  CHECK_THROWS_AS(map_info_relation("because", table), InputError);
  CHECK(map_info_relation("elaboration", InfoRelationMap::identity()) ==
        InfoRel::kElaboration);
}

TEST_CASE("random corpora are consistent") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    CHECK(validate_corpus(fixtures::random_corpus(rng)).empty());
  }
}

}  // namespace
}  // namespace cuelearn::corpus
