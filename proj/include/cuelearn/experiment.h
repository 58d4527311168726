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

// End-to-end cue learning experiments.
//
// An experiment computes the majority baseline of one target dataset,
// cross-validates a tree on every single feature, then cross-validates trees
// on a family of feature subsets derived from the tree learned on all
// features. The reported tree is the simplest one statistically equivalent to
// the best, preferring trees rooted at trib_pos because that feature alone
// identifies a specific contributor.

#ifndef CUELEARN_EXPERIMENT_H_
#define CUELEARN_EXPERIMENT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuelearn/corpus.h"
#include "cuelearn/evaluation.h"
#include "cuelearn/induction.h"

namespace cuelearn::experiment {

struct FeatureSet {
  std::string name;
  // Attribute names in declaration order.
  std::vector<std::string> attributes;

  bool operator==(const FeatureSet&) const = default;
};

struct ExperimentPlan {
  corpus::Target target = corpus::Target::kOccurrence;
  // Occurrence experiments use core1, core2 or implicit_core; placement
  // always uses the cued core2 relations.
  corpus::Subset subset = corpus::Subset::kCore2;
  // Explicit candidate subsets; when empty they are enumerated from the tree
  // trained on all features.
  std::vector<FeatureSet> feature_sets;
  evaluation::CvOptions cv;
  induction::LearnerParams params;

  bool operator==(const ExperimentPlan&) const = default;
};

struct CandidateTreeResult {
  FeatureSet features;
  evaluation::CvResult cv;
  // Summary of the pruned tree trained on the whole dataset.
  induction::TreeSummary tree;

  bool operator==(const CandidateTreeResult&) const = default;
};

struct ReplicationReport {
  ExperimentPlan plan;
  int rows = 0;
  double baseline = 0;
  // Every attribute on its own, in declaration order.
  std::vector<CandidateTreeResult> single_features;
  // Names of single features whose upper bound beats the baseline, best
  // first.
  std::vector<std::string> best_features;
  std::vector<CandidateTreeResult> candidates;
  std::size_t selected = 0;
  // Absent when the baseline is zero.
  std::optional<double> error_reduction;

  const CandidateTreeResult& best() const { return candidates.at(selected); }
  bool operator==(const ReplicationReport&) const = default;
};

inline constexpr std::string_view kAllFeaturesName = "all";

// Candidate subsets: all eleven features; every subset of size >= 2 of the
// four highest attributes of the all-features tree (which includes the top
// two and top three); and the eight relation/embedding features plus one
// segment-structure feature, three ways. Duplicates are dropped. Throws
// std::invalid_argument if the summary lists fewer than two features.
std::vector<FeatureSet> enumerate_feature_sets(
    const induction::TreeSummary& all_features_summary);

// The three nine-feature sets and the all-features set only.
std::vector<FeatureSet> fixed_feature_sets();

// Index of the selected candidate. Throws std::invalid_argument when empty.
std::size_t select_best(std::span<const CandidateTreeResult> candidates);

// Throws InputError when the corpus is inconsistent or the subset is empty.
ReplicationReport run_occurrence_experiment(
    std::span<const corpus::RelationRecord> records, corpus::Subset subset,
    const ExperimentPlan& plan);

// Also evaluates the pair formed by the two best single features. Throws
// InputError when there are no cued core2 records.
ReplicationReport run_placement_experiment(
    std::span<const corpus::RelationRecord> records,
    const ExperimentPlan& plan);

// Dispatches on plan.target.
ReplicationReport run_experiment(
    std::span<const corpus::RelationRecord> records,
    const ExperimentPlan& plan);

// Structured report, a JSON object with a "version" field.
std::string format_report_json(const ReplicationReport& report);
// Throws InputError on malformed input.
ReplicationReport parse_report_json(std::string_view text);

// Human-readable report laid out as Baseline / Best features / Best tree,
// with error percentages to one decimal place.
std::string format_report_table(const ReplicationReport& report);

// "25.6±1.2"
std::string format_interval(const evaluation::Interval& interval);

}  // namespace cuelearn::experiment

#endif  // CUELEARN_EXPERIMENT_H_
