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

// Random inputs shared by several test binaries.

#ifndef CUELEARN_TESTS_FIXTURES_H_
#define CUELEARN_TESTS_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cuelearn/corpus.h"
#include "cuelearn/dataset.h"
#include "cuelearn/synth.h"

namespace fixtures {

inline int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

inline std::string token(std::mt19937_64& rng) {
  static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_-";
  std::string out(1, alphabet[pick(rng, 26)]);
  const int len = pick(rng, 7);
  for (int i = 0; i < len; ++i) out += alphabet[pick(rng, sizeof(alphabet) - 1)];
  return out;
}

// Mixed discrete/continuous dataset with some missing values.
inline cuelearn::Dataset random_dataset(std::mt19937_64& rng) {
  using namespace cuelearn;
  std::vector<Attribute> attributes;
  const int attribute_count = 1 + pick(rng, 5);
  for (int a = 0; a < attribute_count; ++a) {
    const std::string name = "a" + std::to_string(a) + token(rng);
    if (pick(rng, 3) == 0) {
      attributes.push_back(continuous_attribute(name));
    } else {
      std::vector<std::string> values;
      const int count = 1 + pick(rng, 5);
      for (int v = 0; v < count; ++v) {
        values.push_back("v" + std::to_string(v) + token(rng));
      }
      attributes.push_back(discrete_attribute(name, values));
    }
  }
  std::vector<std::string> classes;
  const int class_count = 1 + pick(rng, 3);
  for (int c = 0; c < class_count; ++c) {
    classes.push_back("c" + std::to_string(c) + token(rng));
  }
  AttributeSchema schema(attributes, "class", classes);
  Dataset dataset(schema);
  const int rows = pick(rng, 40);
  std::uniform_real_distribution<double> real(-1000, 1000);
  for (int r = 0; r < rows; ++r) {
    Example e;
    for (const auto& attribute : attributes) {
      if (pick(rng, 10) == 0) {
        e.values.push_back(kMissing);
      } else if (attribute.discrete()) {
        e.values.push_back(pick(rng, static_cast<int>(attribute.values.size())));
      } else {
        // Mix integers, short decimals and full-precision doubles.
        switch (pick(rng, 3)) {
          case 0: e.values.push_back(pick(rng, 10)); break;
          case 1: e.values.push_back(pick(rng, 10000) / 100.0); break;
          default: e.values.push_back(real(rng)); break;
        }
      }
    }
    e.label = pick(rng, class_count);
    dataset.add(e);
  }
  return dataset;
}

inline cuelearn::corpus::RelationFeatures random_features(
    std::mt19937_64& rng) {
  using namespace cuelearn::corpus;
  RelationFeatures f;
  const int before = pick(rng, 4);
  const int after = pick(rng, 4) + (before == 0 ? 1 : 0);
  Side side = Side::kAfter;
  if (after == 0 || (before > 0 && pick(rng, 2) == 0)) side = Side::kBefore;
  const int count = side == Side::kBefore ? before : after;
  f.trib_pos = TribPos(before, after, 1 + pick(rng, count), side);
  f.inten_structure = "s" + std::to_string(pick(rng, 5));
  f.infor_structure = token(rng);
  f.inten_rel = static_cast<IntenRel>(pick(rng, 3));
  f.info_rel = static_cast<InfoRel>(pick(rng, 3));  // never temporal
  f.syn_rel = static_cast<SynRel>(pick(rng, 4));
  f.adjacency = pick(rng, 2) == 1;
  f.core_type = static_cast<UnitType>(pick(rng, 4));
  f.trib_type = static_cast<UnitType>(pick(rng, 4));
  f.above = pick(rng, 6);
  f.below = pick(rng, 6);
  return f;
}

// A corpus satisfying every record invariant.
inline std::vector<cuelearn::corpus::RelationRecord> random_corpus(
    std::mt19937_64& rng) {
  using namespace cuelearn::corpus;
  std::vector<RelationRecord> records;
  const int n = pick(rng, 30);
  for (int i = 0; i < n; ++i) {
    RelationRecord r;
    r.id = "r" + std::to_string(i) + "-" + token(rng);
    r.subset = kAllSubsets[pick(rng, 5)];
    r.cued = pick(rng, 2) == 1;
    if (r.cued) {
      r.cue_position = r.subset == Subset::kCore2 && pick(rng, 2) == 0
                           ? CuePosition::kOnCore
                           : CuePosition::kOnTrib;
    }
    if (is_core_contributor(r.subset)) r.features = random_features(rng);
    records.push_back(std::move(r));
  }
  return records;
}

// Default corpus shape with a core2 occurrence rule over trib_pos and
// inten_rel: a contributor immediately before its core, or one that
// convinces, is cued.
inline cuelearn::synth::SynthSpec planted_occurrence_spec(double noise,
                                                          std::uint64_t seed) {
  using namespace cuelearn;
  auto spec = synth::default_spec();
  spec.seed = seed;
  synth::PlantedRule rule;
  rule.target = corpus::Target::kOccurrence;
  rule.subsets = {corpus::Subset::kCore2};
  rule.cases = {
      {{{"trib_pos",
         {"B1A0-1before", "B1A1-1before", "B2A0-2before", "B2A1-2before",
          "B1A2-1before", "B3A0-3before"}}},
       "cued"},
      {{{"inten_rel", {"convince"}}}, "cued"}};
  rule.otherwise = "not_cued";
  rule.noise = noise;
  spec.rules.push_back(rule);
  return spec;
}

}  // namespace fixtures

#endif  // CUELEARN_TESTS_FIXTURES_H_
