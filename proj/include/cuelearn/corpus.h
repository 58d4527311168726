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

// Coded core:contributor relations and their conversion to learning data.
//
// Each record describes one contributor's relation to the core of its
// segment, coded with eleven features. Records from clusters and joints carry
// no features; they are kept so corpus-level cue statistics can be computed.

#ifndef CUELEARN_CORPUS_H_
#define CUELEARN_CORPUS_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuelearn/dataset.h"

namespace cuelearn::corpus {

enum class Subset { kCore1, kCore2, kImplicitCore, kCluster, kJoint };
enum class CuePosition { kOnCore, kOnTrib, kNone };
enum class Side { kBefore, kAfter };
enum class IntenRel { kEnable, kConvince, kConcede };
enum class InfoRel { kCausality, kSimilarity, kElaboration, kTemporal };
enum class SynRel {
  kIndependent,
  kCoordinated,
  kTribSubordinateToCore,
  kCoreSubordinateToTrib
};
enum class UnitType { kSegment, kAction, kState, kMatrix };

// Lowercase wire names ("core1", "on_trib", "trib_subordinate_to_core", ...).
std::string_view to_string(Subset value);
std::string_view to_string(CuePosition value);
std::string_view to_string(Side value);
std::string_view to_string(IntenRel value);
std::string_view to_string(InfoRel value);
std::string_view to_string(SynRel value);
std::string_view to_string(UnitType value);

std::optional<Subset> parse_subset(std::string_view text);
std::optional<CuePosition> parse_cue_position(std::string_view text);
std::optional<IntenRel> parse_inten_rel(std::string_view text);
std::optional<InfoRel> parse_info_rel(std::string_view text);
std::optional<SynRel> parse_syn_rel(std::string_view text);
std::optional<UnitType> parse_unit_type(std::string_view text);

inline constexpr std::array<Subset, 5> kAllSubsets = {
    Subset::kCore1, Subset::kCore2, Subset::kImplicitCore, Subset::kCluster,
    Subset::kJoint};

// True for the three subsets whose records carry features.
bool is_core_contributor(Subset subset);

// Position of a contributor within its segment, written e.g. "B1A3-2after":
// one contributor before the core, three after, and this is the second of
// those after it.
class TribPos {
 public:
  // Throws InputError if index is outside [1, count on side] or the segment
  // has no contributors.
  TribPos(int before, int after, int index, Side side);

  int before() const { return before_; }
  int after() const { return after_; }
  int index() const { return index_; }
  Side side() const { return side_; }

  bool operator==(const TribPos&) const = default;

 private:
  int before_;
  int after_;
  int index_;
  Side side_;
};

// Throws InputError on malformed labels or out-of-range components.
TribPos parse_trib_pos(std::string_view label);
std::string format_trib_pos(const TribPos& pos);

struct RelationFeatures {
  TribPos trib_pos{0, 1, 1, Side::kAfter};
  std::string inten_structure;
  std::string infor_structure;
  IntenRel inten_rel = IntenRel::kEnable;
  InfoRel info_rel = InfoRel::kCausality;
  SynRel syn_rel = SynRel::kIndependent;
  bool adjacency = false;
  UnitType core_type = UnitType::kSegment;
  UnitType trib_type = UnitType::kSegment;
  int above = 0;
  int below = 0;

  bool operator==(const RelationFeatures&) const = default;
};

struct RelationRecord {
  std::string id;
  Subset subset = Subset::kCore1;
  std::optional<RelationFeatures> features;
  bool cued = false;
  CuePosition cue_position = CuePosition::kNone;

  bool operator==(const RelationRecord&) const = default;
};

// Feature names in declaration order; these are also the learning attribute
// names.
inline constexpr std::array<std::string_view, 11> kFeatureNames = {
    "trib_pos",  "inten_structure", "infor_structure", "inten_rel",
    "info_rel",  "syn_rel",         "adjacency",       "core_type",
    "trib_type", "above",           "below"};

// The features describing segment structure; the other eight describe the
// relation itself or its embedding.
inline constexpr std::array<std::string_view, 3> kSegmentStructureFeatures = {
    "trib_pos", "inten_structure", "infor_structure"};

// Textual value of one feature, as used in learning datasets. Throws
// InputError for an unknown feature name.
std::string feature_value(const RelationFeatures& features,
                          std::string_view name);

struct Violation {
  std::string record_id;
  std::string rule;

  bool operator==(const Violation&) const = default;
};

// Rule names reported by validate_corpus.
namespace rules {
inline constexpr std::string_view kDuplicateId = "duplicate_id";
inline constexpr std::string_view kCuedPosition = "cued_iff_position";
inline constexpr std::string_view kCoreFirstOnCore = "core1_cue_on_core";
inline constexpr std::string_view kImplicitOnCore = "implicit_core_cue_on_core";
inline constexpr std::string_view kTemporalOutsideClusters =
    "temporal_outside_clusters";
inline constexpr std::string_view kMissingFeatures = "missing_features";
inline constexpr std::string_view kUnexpectedFeatures = "unexpected_features";
inline constexpr std::string_view kNegativeEmbedding = "negative_embedding";
}  // namespace rules

// Every broken record invariant yields one violation; records are reported in
// input order. An empty result means the corpus is consistent.
std::vector<Violation> validate_corpus(std::span<const RelationRecord> records);

class SubsetPartition {
 public:
  std::vector<RelationRecord>& operator[](Subset subset) {
    return lists_[static_cast<std::size_t>(subset)];
  }
  const std::vector<RelationRecord>& operator[](Subset subset) const {
    return lists_[static_cast<std::size_t>(subset)];
  }

 private:
  std::array<std::vector<RelationRecord>, 5> lists_;
};

SubsetPartition partition_by_subset(std::span<const RelationRecord> records);

// The cued records of a core2 list. Throws InputError if any input record is
// not from core2.
std::vector<RelationRecord> placement_subset(
    std::span<const RelationRecord> records);

enum class Target { kOccurrence, kPlacement };
std::string_view to_string(Target target);
std::optional<Target> parse_target(std::string_view text);

// Class value lists, in declaration order.
inline constexpr std::array<std::string_view, 2> kOccurrenceClasses = {
    "cued", "not_cued"};
inline constexpr std::array<std::string_view, 2> kPlacementClasses = {
    "on_core", "on_trib"};

// Builds the eleven-attribute learning view. Discrete value lists are the
// sorted union of observed values; above and below are continuous. Throws
// InputError if a record lacks features or, for placement, is not cued.
Dataset to_learning_dataset(std::span<const RelationRecord> records,
                            Target target);

// Maps raw informational relation labels onto the four classes.
class InfoRelationMap {
 public:
  InfoRelationMap() = default;
  explicit InfoRelationMap(std::map<std::string, InfoRel> table)
      : table_(std::move(table)) {}

  // Identity on the four class names.
  static InfoRelationMap identity();

  const std::map<std::string, InfoRel>& table() const { return table_; }

 private:
  std::map<std::string, InfoRel> table_;
};

// Throws InputError for labels absent from the table.
InfoRel map_info_relation(std::string_view raw_label,
                          const InfoRelationMap& mapping);

}  // namespace cuelearn::corpus

#endif  // CUELEARN_CORPUS_H_
