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

// C4.5-style decision tree induction.
//
// Trees split discrete attributes on groups of values and continuous
// attributes on a single cut point, choosing among candidate tests by gain
// ratio. Candidates are restricted to those whose information gain is at
// least the mean gain of all candidates (the "gain guard"). Trees are then
// simplified bottom-up by error-based pruning, which compares the upper
// confidence limit of the error rate of a subtree, a leaf, and the subtree's
// largest branch.
//
// Discrete attributes with few observed values at a node are grouped by
// exhaustive partition search; the rest are grouped greedily. A discrete
// attribute may be tested again below a grouped test, on the values of the
// branch taken. Tests with zero gain are admissible.
//
// Missing values are skipped when scoring a test on an attribute and follow
// the branch with the most training rows everywhere else.

#ifndef CUELEARN_INDUCTION_H_
#define CUELEARN_INDUCTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuelearn/dataset.h"

namespace cuelearn::induction {

using RowSpan = std::span<const std::size_t>;

struct LearnerParams {
  // Merge discrete values into groups instead of one branch per value.
  bool grouping = true;
  // Every branch of a test must receive at least this many training rows.
  int min_branch_instances = 2;
  // Confidence level for the pessimistic error estimate.
  double cf = 0.25;
  // Only consider tests whose gain is at least the mean candidate gain.
  bool gain_guard = true;

  // Throws std::invalid_argument when out of range.
  void validate() const;

  bool operator==(const LearnerParams&) const = default;
};

class SplitTest {
 public:
  // `group_of_value[v]` is the branch of declared value v. Group ids are
  // renumbered by first appearance, so equal partitions compare equal.
  // Throws std::invalid_argument for fewer than two groups.
  static SplitTest grouped(std::size_t attribute,
                           std::vector<int> group_of_value);
  // Branch 0 takes values <= cut, branch 1 values > cut.
  static SplitTest threshold(std::size_t attribute, double cut);

  bool is_grouped() const { return grouped_; }
  std::size_t attribute() const { return attribute_; }
  int branch_count() const { return branch_count_; }
  const std::vector<int>& groups() const { return groups_; }
  double cut() const { return cut_; }

  // Branch taken by a value, or nullopt if the value is missing.
  std::optional<int> branch_of(double value) const;

  // Declared value indices of each group, in group order.
  std::vector<std::vector<int>> group_members() const;

  bool operator==(const SplitTest&) const = default;

 private:
  SplitTest() = default;

  bool grouped_ = false;
  std::size_t attribute_ = 0;
  int branch_count_ = 0;
  std::vector<int> groups_;
  double cut_ = 0;
};

struct SplitEvaluation {
  double gain = 0;
  double split_info = 0;
  double gain_ratio = 0;
};

// Shannon entropy in bits of a class count vector. Throws
// std::invalid_argument if every count is zero or any count is negative.
double class_entropy(std::span<const int> counts);

// Scores a test on the rows (all rows when omitted) with a known value for
// the test attribute. Throws std::invalid_argument when fewer than two
// branches receive rows.
SplitEvaluation evaluate_split(const Dataset& dataset, const SplitTest& test);
SplitEvaluation evaluate_split(const Dataset& dataset, RowSpan rows,
                               const SplitTest& test);

struct ThresholdChoice {
  double cut = 0;
  SplitEvaluation evaluation;
};

// Best cut point for a continuous attribute: the midpoint between
// consecutive distinct values with maximal gain, smallest cut on ties. Only
// cuts leaving at least `min_branch` rows on each side are considered.
// Returns nullopt when no cut qualifies.
std::optional<ThresholdChoice> best_threshold(const Dataset& dataset,
                                              std::size_t attribute);
std::optional<ThresholdChoice> best_threshold(const Dataset& dataset,
                                              RowSpan rows,
                                              std::size_t attribute,
                                              int min_branch = 1);

// One branch per observed value; unobserved values join the most frequent
// observed value.
SplitTest singleton_partition(const Dataset& dataset, RowSpan rows,
                              std::size_t attribute);

// Greedy value grouping. Starts from singleton_partition and repeatedly
// applies the pairwise merge with the highest gain ratio while that ratio is
// no lower than the current one and more than two groups remain. Throws
// std::invalid_argument if fewer than two values are observed.
SplitTest group_values(const Dataset& dataset, std::size_t attribute);
SplitTest group_values(const Dataset& dataset, RowSpan rows,
                       std::size_t attribute);

// Attributes with at most this many observed values at a node are grouped by
// best_partition during tree growth; larger ones use group_values.
inline constexpr std::size_t kMaxExhaustiveValues = 6;

// Highest gain ratio partition of the observed values into at least two
// groups, each receiving at least `min_branch` rows. Unobserved values join the largest group; ties go to the
// lexicographically smallest canonical assignment. Returns nullopt when no
// partition qualifies. Throws std::invalid_argument if fewer than two or more
// than kMaxExhaustiveValues values are observed.
std::optional<SplitTest> best_partition(const Dataset& dataset, RowSpan rows,
                                        std::size_t attribute, int min_branch);

struct TreeNode {
  // Absent for leaves.
  std::optional<SplitTest> test;
  // Aligned with the test's branches.
  std::vector<TreeNode> children;
  // Training rows reaching this node, per class.
  std::vector<int> class_counts;
  // Predicted class.
  int label = 0;

  bool is_leaf() const { return !test.has_value(); }
  int count() const;
  // Training rows reaching the node that are not of the predicted class.
  int errors() const;
};

struct DecisionTree {
  AttributeSchema schema;
  LearnerParams params;
  TreeNode root;
};

// Throws InputError on an empty dataset and std::invalid_argument on bad
// parameters.
DecisionTree build_tree(const Dataset& dataset, const LearnerParams& params);

// Upper confidence limit of the error rate given `errors` out of `n`: the p
// at which observing at most `errors` errors has probability cf. Returns 1
// when errors == n. Throws std::invalid_argument for invalid counts.
double ucf(int errors, int n, double cf);

// Sum over leaves of n * ucf(e, n, cf); leaves without rows contribute 0.
double predicted_errors(const TreeNode& node, double cf);

// Error-based pruning against the training rows the tree was built from.
DecisionTree prune(const DecisionTree& tree, const Dataset& training,
                   double cf);

// build_tree followed by prune with the same confidence level.
DecisionTree train(const Dataset& dataset, const LearnerParams& params);

struct Classification {
  int label = 0;
  // Class frequencies of the training rows at the leaf.
  std::vector<double> distribution;
};

// Throws InputError if the row does not match the tree's schema.
Classification classify(const DecisionTree& tree, std::span<const double> row);

struct TestEstimate {
  int rows = 0;
  int errors = 0;
  // Leaf-wise pessimistic errors for the routed rows.
  double predicted_errors = 0;

  double error_percent() const;
  double predicted_percent() const;
};

// Routes every row of `dataset` through the tree and tallies errors.
TestEstimate test_tree(const DecisionTree& tree, const Dataset& dataset,
                       double cf);

struct LevelFeature {
  std::string name;
  int level = 0;

  bool operator==(const LevelFeature&) const = default;
};

struct TreeSummary {
  int node_count = 0;
  // Up to six attributes, in order of their shallowest occurrence.
  std::vector<LevelFeature> features;
  std::optional<std::string> root_attribute;

  bool operator==(const TreeSummary&) const = default;
};

inline constexpr std::size_t kSummaryFeatures = 6;

TreeSummary summarize(const DecisionTree& tree);
int node_count(const TreeNode& node);
int depth(const TreeNode& node);

}  // namespace cuelearn::induction

#endif  // CUELEARN_INDUCTION_H_
