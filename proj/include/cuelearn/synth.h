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

// Synthetic corpora with the shape of a coded tutorial-explanation corpus.
//
// Subset sizes and cue counts are met exactly. Features are drawn from
// per-attribute categorical marginals. A planted rule maps up to two features
// to a class; each record's features are drawn conditioned on the rule
// producing the record's class, except for a `noise` fraction of records
// (chosen at random) whose features are conditioned on the rule producing
// the other class.
//
// Spec files are JSON:
//
//   {"seed": 7,
//    "subsets": {"core2": {"size": 155, "cued": 100, "on_trib": 43}},
//    "marginals": {"inten_rel": {"enable": 0.5, "convince": 0.5}},
//    "rules": [{"target": "occurrence", "subsets": ["core2"],
//               "cases": [{"when": {"inten_rel": ["convince"]},
//                          "then": "cued"}],
//               "otherwise": "not_cued", "noise": 0.05}]}
//
// Omitted "subsets" selects the default corpus shape; omitted marginals use
// the defaults.

#ifndef CUELEARN_SYNTH_H_
#define CUELEARN_SYNTH_H_

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuelearn/corpus.h"

namespace cuelearn::synth {

struct SubsetShape {
  int size = 0;
  int cued = 0;
  // Cued records with the cue on the contributor. Must equal `cued` outside
  // core2, where a first or implicit core never carries the cue.
  int on_trib = 0;

  bool operator==(const SubsetShape&) const = default;
};

// Ordered (value, probability) pairs.
using Marginal = std::vector<std::pair<std::string, double>>;

struct RuleCase {
  // Feature name -> accepted values; all entries must match.
  std::map<std::string, std::set<std::string>> when;
  std::string then;

  bool operator==(const RuleCase&) const = default;
};

struct PlantedRule {
  corpus::Target target = corpus::Target::kOccurrence;
  std::vector<corpus::Subset> subsets;
  // First matching case wins.
  std::vector<RuleCase> cases;
  std::string otherwise;
  double noise = 0;

  // Class the rule assigns to a feature vector.
  std::string apply(const corpus::RelationFeatures& features) const;
  bool operator==(const PlantedRule&) const = default;
};

struct SynthSpec {
  std::array<SubsetShape, 5> subsets{};
  std::map<std::string, Marginal> marginals;
  std::vector<PlantedRule> rules;
  std::uint64_t seed = 0;

  SubsetShape& shape(corpus::Subset subset) {
    return subsets[static_cast<std::size_t>(subset)];
  }
  const SubsetShape& shape(corpus::Subset subset) const {
    return subsets[static_cast<std::size_t>(subset)];
  }
  bool operator==(const SynthSpec&) const = default;
};

// Default marginals for every feature: trib_pos over segments with up to
// three contributors, concede weighted 24/406 among intentional relations,
// no temporal relations, and uniform distributions elsewhere.
std::map<std::string, Marginal> default_marginals();

// Corpus of 780 relations: core1 127 (52 cued), core2 155 (100 cued, 43 on
// the contributor), implicit_core 124 (29 cued), joints 64 (19 cued),
// clusters 310 (276 cued). Default marginals, no rules.
SynthSpec default_spec();

// Throws InputError describing the first inconsistency.
void validate_spec(const SynthSpec& spec);

// Deterministic in spec.seed. Throws InputError for an inconsistent spec or
// a rule that cannot produce a required class under the marginals.
std::vector<corpus::RelationRecord> generate_corpus(const SynthSpec& spec);

// Throws InputError on malformed JSON or an invalid spec.
SynthSpec parse_spec_json(std::string_view text);
std::string format_spec_json(const SynthSpec& spec);

}  // namespace cuelearn::synth

#endif  // CUELEARN_SYNTH_H_
