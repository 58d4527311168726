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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "cuelearn/error.h"

namespace cuelearn::corpus {
namespace {

constexpr std::array<std::string_view, 5> kSubsetNames = {
    "core1", "core2", "implicit_core", "cluster", "joint"};
constexpr std::array<std::string_view, 3> kCuePositionNames = {
    "on_core", "on_trib", "none"};
constexpr std::array<std::string_view, 2> kSideNames = {"before", "after"};
constexpr std::array<std::string_view, 3> kIntenRelNames = {
    "enable", "convince", "concede"};
constexpr std::array<std::string_view, 4> kInfoRelNames = {
    "causality", "similarity", "elaboration", "temporal"};
constexpr std::array<std::string_view, 4> kSynRelNames = {
    "independent", "coordinated", "trib_subordinate_to_core",
    "core_subordinate_to_trib"};
constexpr std::array<std::string_view, 4> kUnitTypeNames = {
    "segment", "action", "state", "matrix"};
constexpr std::array<std::string_view, 2> kTargetNames = {"occurrence",
                                                          "placement"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& names,
                           std::string_view text) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::string_view, N>& names,
                         Enum value) {
  return names.at(static_cast<std::size_t>(value));
}

// Reads a run of decimal digits starting at pos; advances pos.
std::optional<int> read_number(std::string_view text, std::size_t& pos) {
  std::size_t end = pos;
  while (end < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[end]))) {
    ++end;
  }
  if (end == pos) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
  if (ec != std::errc() || ptr != text.data() + end) return std::nullopt;
  pos = end;
  return value;
}

}  // namespace

std::string_view to_string(Subset value) { return name_of(kSubsetNames, value); }
std::string_view to_string(CuePosition value) {
  return name_of(kCuePositionNames, value);
}
std::string_view to_string(Side value) { return name_of(kSideNames, value); }
std::string_view to_string(IntenRel value) {
  return name_of(kIntenRelNames, value);
}
std::string_view to_string(InfoRel value) {
  return name_of(kInfoRelNames, value);
}
std::string_view to_string(SynRel value) { return name_of(kSynRelNames, value); }
std::string_view to_string(UnitType value) {
  return name_of(kUnitTypeNames, value);
}
std::string_view to_string(Target target) {
  return name_of(kTargetNames, target);
}

std::optional<Subset> parse_subset(std::string_view text) {
  return lookup<Subset>(kSubsetNames, text);
}
std::optional<CuePosition> parse_cue_position(std::string_view text) {
  return lookup<CuePosition>(kCuePositionNames, text);
}
std::optional<IntenRel> parse_inten_rel(std::string_view text) {
  return lookup<IntenRel>(kIntenRelNames, text);
}
std::optional<InfoRel> parse_info_rel(std::string_view text) {
  return lookup<InfoRel>(kInfoRelNames, text);
}
std::optional<SynRel> parse_syn_rel(std::string_view text) {
  return lookup<SynRel>(kSynRelNames, text);
}
std::optional<UnitType> parse_unit_type(std::string_view text) {
  return lookup<UnitType>(kUnitTypeNames, text);
}
std::optional<Target> parse_target(std::string_view text) {
  return lookup<Target>(kTargetNames, text);
}

bool is_core_contributor(Subset subset) {
  return subset == Subset::kCore1 || subset == Subset::kCore2 ||
         subset == Subset::kImplicitCore;
}

TribPos::TribPos(int before, int after, int index, Side side)
    : before_(before), after_(after), index_(index), side_(side) {
  if (before < 0 || after < 0) {
    throw InputError("trib-pos contributor counts must be nonnegative");
  }
  if (before + after < 1) {
    throw InputError("trib-pos segment has no contributors");
  }
  const int side_count = side == Side::kBefore ? before : after;
  if (index < 1 || index > side_count) {
    throw InputError("trib-pos index " + std::to_string(index) +
                     " out of range for " + std::string(to_string(side)) +
                     " count " + std::to_string(side_count));
  }
}

TribPos parse_trib_pos(std::string_view label) {
  auto malformed = [&] {
    return InputError("malformed trib-pos label '" + std::string(label) + "'");
  };
  std::size_t pos = 0;
  if (pos >= label.size() || label[pos++] != 'B') throw malformed();
  auto before = read_number(label, pos);
  if (!before || pos >= label.size() || label[pos++] != 'A') throw malformed();
  auto after = read_number(label, pos);
  if (!after || pos >= label.size() || label[pos++] != '-') throw malformed();
  auto index = read_number(label, pos);
  if (!index) throw malformed();
  auto side = lookup<Side>(kSideNames, label.substr(pos));
  if (!side) throw malformed();
  return TribPos(*before, *after, *index, *side);
}

std::string format_trib_pos(const TribPos& pos) {
  return "B" + std::to_string(pos.before()) + "A" + std::to_string(pos.after()) +
         "-" + std::to_string(pos.index()) + std::string(to_string(pos.side()));
}

std::string feature_value(const RelationFeatures& f, std::string_view name) {
  if (name == "trib_pos") return format_trib_pos(f.trib_pos);
  if (name == "inten_structure") return f.inten_structure;
  if (name == "infor_structure") return f.infor_structure;
  if (name == "inten_rel") return std::string(to_string(f.inten_rel));
  if (name == "info_rel") return std::string(to_string(f.info_rel));
  if (name == "syn_rel") return std::string(to_string(f.syn_rel));
  if (name == "adjacency") return f.adjacency ? "true" : "false";
  if (name == "core_type") return std::string(to_string(f.core_type));
  if (name == "trib_type") return std::string(to_string(f.trib_type));
  if (name == "above") return std::to_string(f.above);
  if (name == "below") return std::to_string(f.below);
  throw InputError("unknown feature '" + std::string(name) + "'");
}

std::vector<Violation> validate_corpus(
    std::span<const RelationRecord> records) {
  std::vector<Violation> violations;
  std::set<std::string_view> seen;
  for (const auto& record : records) {
    auto flag = [&](std::string_view rule) {
      violations.push_back({record.id, std::string(rule)});
    };
    if (!seen.insert(record.id).second) flag(rules::kDuplicateId);
    if (record.cued != (record.cue_position != CuePosition::kNone)) {
      flag(rules::kCuedPosition);
    }
    if (record.subset == Subset::kCore1 && record.cued &&
        record.cue_position != CuePosition::kOnTrib) {
      flag(rules::kCoreFirstOnCore);
    }
    if (record.subset == Subset::kImplicitCore &&
        record.cue_position == CuePosition::kOnCore) {
      flag(rules::kImplicitOnCore);
    }
    if (is_core_contributor(record.subset)) {
      if (!record.features) {
        flag(rules::kMissingFeatures);
        continue;
      }
      if (record.features->info_rel == InfoRel::kTemporal) {
        flag(rules::kTemporalOutsideClusters);
      }
      if (record.features->above < 0 || record.features->below < 0) {
        flag(rules::kNegativeEmbedding);
      }
    } else if (record.features) {
      flag(rules::kUnexpectedFeatures);
    }
  }
  return violations;
}

SubsetPartition partition_by_subset(std::span<const RelationRecord> records) {
  SubsetPartition partition;
  for (const auto& record : records) partition[record.subset].push_back(record);
  return partition;
}

std::vector<RelationRecord> placement_subset(
    std::span<const RelationRecord> records) {
  std::vector<RelationRecord> cued;
  for (const auto& record : records) {
    if (record.subset != Subset::kCore2) {
      throw InputError("placement subset requires core2 records; '" +
                       record.id + "' is " +
                       std::string(to_string(record.subset)));
    }
    if (record.cued) cued.push_back(record);
  }
  return cued;
}

Dataset to_learning_dataset(std::span<const RelationRecord> records,
                            Target target) {
  std::vector<std::set<std::string>> observed(kFeatureNames.size());
  for (const auto& record : records) {
    if (!record.features) {
      throw InputError("record '" + record.id + "' has no features");
    }
    if (target == Target::kPlacement &&
        (!record.cued || record.cue_position == CuePosition::kNone)) {
      throw InputError("placement requires cued records; '" + record.id +
                       "' is not cued");
    }
    for (std::size_t a = 0; a < kFeatureNames.size(); ++a) {
      observed[a].insert(feature_value(*record.features, kFeatureNames[a]));
    }
  }

  std::vector<Attribute> attributes;
  for (std::size_t a = 0; a < kFeatureNames.size(); ++a) {
    std::string name(kFeatureNames[a]);
    if (name == "above" || name == "below") {
      attributes.push_back(continuous_attribute(std::move(name)));
    } else {
      std::vector<std::string> values(observed[a].begin(), observed[a].end());
      // A schema needs a nonempty value list even when there are no rows.
      if (values.empty()) values.push_back("none");
      attributes.push_back(discrete_attribute(std::move(name), values));
    }
  }
  const auto& class_names = target == Target::kOccurrence ? kOccurrenceClasses
                                                          : kPlacementClasses;
  AttributeSchema schema(std::move(attributes), "class",
                         {std::string(class_names[0]),
                          std::string(class_names[1])});

  std::vector<Example> rows;
  rows.reserve(records.size());
  for (const auto& record : records) {
    Example example;
    for (std::size_t a = 0; a < kFeatureNames.size(); ++a) {
      const auto value = feature_value(*record.features, kFeatureNames[a]);
      if (schema.attribute(a).discrete()) {
        example.values.push_back(
            static_cast<double>(*schema.find_value(a, value)));
      } else {
        example.values.push_back(kFeatureNames[a] == "above"
                                     ? record.features->above
                                     : record.features->below);
      }
    }
    if (target == Target::kOccurrence) {
      example.label = record.cued ? 0 : 1;
    } else {
      example.label = record.cue_position == CuePosition::kOnCore ? 0 : 1;
    }
    rows.push_back(std::move(example));
  }
  return Dataset(std::move(schema), std::move(rows));
}

InfoRelationMap InfoRelationMap::identity() {
  std::map<std::string, InfoRel> table;
  for (std::size_t i = 0; i < kInfoRelNames.size(); ++i) {
    table.emplace(std::string(kInfoRelNames[i]), static_cast<InfoRel>(i));
  }
  return InfoRelationMap(std::move(table));
}

InfoRel map_info_relation(std::string_view raw_label,
                          const InfoRelationMap& mapping) {
  auto it = mapping.table().find(std::string(raw_label));
  if (it == mapping.table().end()) {
    throw InputError("unmapped informational relation '" +
                     std::string(raw_label) + "'");
  }
  return it->second;
}

}  // namespace cuelearn::corpus
