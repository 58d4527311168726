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

#include "cuelearn/induction.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cuelearn/error.h"

namespace cuelearn::induction {
namespace {

// Tolerance when comparing criteria that should tie.
constexpr double kTieEpsilon = 1e-12;

using CountMatrix = std::vector<std::vector<int>>;

int majority(std::span<const int> counts) {
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) -
                          counts.begin());
}

double entropy_of(std::span<const int> counts) {
  double total = 0;
  for (int c : counts) total += c;
  if (total <= 0) return 0;
  double h = 0;
  for (int c : counts) {
    if (c > 0) {
      const double p = c / total;
      h -= p * std::log2(p);
    }
  }
  return h;
}

// Scores a branch-by-class count matrix; nullopt if fewer than two branches
// are nonempty.
std::optional<SplitEvaluation> evaluate_counts(const CountMatrix& branches) {
  if (branches.empty()) return std::nullopt;
  const std::size_t classes = branches.front().size();
  std::vector<int> parent(classes, 0);
  std::vector<int> sizes;
  int nonempty = 0;
  for (const auto& branch : branches) {
    int size = 0;
    for (std::size_t c = 0; c < classes; ++c) {
      parent[c] += branch[c];
      size += branch[c];
    }
    sizes.push_back(size);
    if (size > 0) ++nonempty;
  }
  if (nonempty < 2) return std::nullopt;
  const double total = std::accumulate(sizes.begin(), sizes.end(), 0.0);
  double children = 0;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (sizes[b] > 0) children += sizes[b] / total * entropy_of(branches[b]);
  }
  SplitEvaluation result;
  result.gain = std::max(0.0, entropy_of(parent) - children);
  result.split_info = entropy_of(sizes);
  result.gain_ratio = result.gain / result.split_info;
  return result;
}

std::vector<std::size_t> all_rows(const Dataset& dataset) {
  std::vector<std::size_t> rows(dataset.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return rows;
}

CountMatrix branch_counts(const Dataset& dataset, RowSpan rows,
                          const SplitTest& test) {
  CountMatrix counts(test.branch_count(),
                     std::vector<int>(dataset.schema().class_count(), 0));
  for (auto r : rows) {
    const auto& row = dataset.row(r);
    if (auto branch = test.branch_of(row.values[test.attribute()])) {
      ++counts[*branch][row.label];
    }
  }
  return counts;
}

// Class counts per declared value over rows with a known value.
CountMatrix value_counts(const Dataset& dataset, RowSpan rows,
                         std::size_t attribute) {
  const auto& declared = dataset.schema().attribute(attribute);
  if (!declared.discrete()) {
    throw std::invalid_argument("attribute '" + declared.name +
                                "' is not discrete");
  }
  CountMatrix counts(declared.values.size(),
                     std::vector<int>(dataset.schema().class_count(), 0));
  for (auto r : rows) {
    const auto& row = dataset.row(r);
    const double v = row.values[attribute];
    if (!is_missing(v)) ++counts[static_cast<std::size_t>(v)][row.label];
  }
  return counts;
}

int total(std::span<const int> counts) {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

// Builds a group assignment from member lists.
std::vector<int> assignment_of(const std::vector<std::vector<int>>& members,
                               std::size_t value_count) {
  std::vector<int> groups(value_count, 0);
  for (std::size_t g = 0; g < members.size(); ++g) {
    for (int v : members[g]) groups[v] = static_cast<int>(g);
  }
  return groups;
}

std::vector<int> canonical(std::vector<int> groups) {
  std::map<int, int> renumber;
  for (int& g : groups) {
    auto [it, inserted] =
        renumber.emplace(g, static_cast<int>(renumber.size()));
    g = it->second;
  }
  return groups;
}

CountMatrix group_counts(const CountMatrix& by_value,
                         const std::vector<std::vector<int>>& members) {
  const std::size_t classes = by_value.empty() ? 0 : by_value.front().size();
  CountMatrix counts(members.size(), std::vector<int>(classes, 0));
  for (std::size_t g = 0; g < members.size(); ++g) {
    for (int v : members[g]) {
      for (std::size_t c = 0; c < classes; ++c) counts[g][c] += by_value[v][c];
    }
  }
  return counts;
}

// Singleton groups of observed values; unobserved values join the group of
// the most frequent observed value.
std::vector<std::vector<int>> initial_groups(const CountMatrix& by_value) {
  std::vector<std::vector<int>> members;
  std::vector<int> unobserved;
  int largest = -1;
  int largest_size = -1;
  for (std::size_t v = 0; v < by_value.size(); ++v) {
    const int size = total(by_value[v]);
    if (size == 0) {
      unobserved.push_back(static_cast<int>(v));
      continue;
    }
    if (size > largest_size) {
      largest_size = size;
      largest = static_cast<int>(members.size());
    }
    members.push_back({static_cast<int>(v)});
  }
  if (members.size() < 2) {
    throw std::invalid_argument("fewer than two observed values");
  }
  for (int v : unobserved) members[largest].push_back(v);
  return members;
}

int largest_child(const TreeNode& node) {
  int best = 0;
  for (std::size_t b = 1; b < node.children.size(); ++b) {
    if (node.children[b].count() > node.children[best].count()) {
      best = static_cast<int>(b);
    }
  }
  return best;
}

int route(const TreeNode& node, const Example& row) {
  const auto branch = node.test->branch_of(row.values[node.test->attribute()]);
  return branch ? *branch : largest_child(node);
}

std::vector<std::vector<std::size_t>> route_rows(const TreeNode& node,
                                                 const Dataset& dataset,
                                                 RowSpan rows) {
  std::vector<std::vector<std::size_t>> parts(node.children.size());
  for (auto r : rows) parts[route(node, dataset.row(r))].push_back(r);
  return parts;
}

std::vector<int> counts_of(const Dataset& dataset, RowSpan rows) {
  std::vector<int> counts(dataset.schema().class_count(), 0);
  for (auto r : rows) ++counts[dataset.row(r).label];
  return counts;
}

TreeNode make_leaf(std::vector<int> counts) {
  TreeNode leaf;
  leaf.label = majority(counts);
  leaf.class_counts = std::move(counts);
  return leaf;
}

double leaf_estimate(int errors, int n, double cf) {
  return n == 0 ? 0.0 : n * ucf(errors, n, cf);
}

struct Candidate {
  SplitTest test;
  SplitEvaluation evaluation;
};

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& dataset, const LearnerParams& params)
      : dataset_(dataset), params_(params) {}

  TreeNode grow(const std::vector<std::size_t>& rows) const {
    TreeNode node = make_leaf(counts_of(dataset_, rows));
    const int n = static_cast<int>(rows.size());
    if (node.errors() == 0 || n < 2 * params_.min_branch_instances) {
      return node;
    }
    auto chosen = choose_test(rows);
    if (!chosen) return node;

    const std::size_t attribute = chosen->attribute();
    // Rows with a missing value follow the branch with the most known rows.
    auto known = branch_counts(dataset_, rows, *chosen);
    std::vector<int> sizes;
    for (const auto& b : known) sizes.push_back(total(b));
    const int fallback = majority(sizes);

    std::vector<std::vector<std::size_t>> parts(chosen->branch_count());
    for (auto r : rows) {
      auto branch = chosen->branch_of(dataset_.row(r).values[attribute]);
      parts[branch ? *branch : fallback].push_back(r);
    }

    node.test = std::move(chosen);
    for (const auto& part : parts) node.children.push_back(grow(part));
    return node;
  }

 private:
  std::optional<SplitTest> choose_test(
      const std::vector<std::size_t>& rows) const {
    std::vector<Candidate> candidates;
    const auto& schema = dataset_.schema();
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
      if (auto candidate = candidate_for(rows, a)) {
        candidates.push_back(std::move(*candidate));
      }
    }
    if (candidates.empty()) return std::nullopt;

    double guard = 0;
    if (params_.gain_guard) {
      for (const auto& c : candidates) guard += c.evaluation.gain;
      guard /= static_cast<double>(candidates.size());
    }
    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
      if (c.evaluation.gain + kTieEpsilon < guard) continue;
      if (!best || c.evaluation.gain_ratio >
                       best->evaluation.gain_ratio + kTieEpsilon) {
        best = &c;
      }
    }
    return best->test;
  }

  std::optional<Candidate> candidate_for(const std::vector<std::size_t>& rows,
                                         std::size_t attribute) const {
    const auto& declared = dataset_.schema().attribute(attribute);
    if (!declared.discrete()) {
      auto choice = best_threshold(dataset_, rows, attribute,
                                   params_.min_branch_instances);
      if (!choice) return std::nullopt;
      return Candidate{SplitTest::threshold(attribute, choice->cut),
                       choice->evaluation};
    }
    const auto by_value = value_counts(dataset_, rows, attribute);
    int observed = 0;
    for (const auto& counts : by_value) observed += total(counts) > 0;
    if (observed < 2) return std::nullopt;

    if (params_.grouping &&
        static_cast<std::size_t>(observed) <= kMaxExhaustiveValues) {
      auto test = best_partition(dataset_, rows, attribute,
                                 params_.min_branch_instances);
      if (!test) return std::nullopt;
      auto evaluation = evaluate_counts(branch_counts(dataset_, rows, *test));
      return Candidate{std::move(*test), *evaluation};
    }
    SplitTest test = params_.grouping
                         ? group_values(dataset_, rows, attribute)
                         : singleton_partition(dataset_, rows, attribute);
    const auto counts = branch_counts(dataset_, rows, test);
    for (const auto& branch : counts) {
      if (total(branch) < params_.min_branch_instances) return std::nullopt;
    }
    auto evaluation = evaluate_counts(counts);
    if (!evaluation) return std::nullopt;
    return Candidate{std::move(test), *evaluation};
  }

  const Dataset& dataset_;
  const LearnerParams& params_;
};

// Recomputes training counts below `node` for a new set of rows, keeping
// the predicted classes.
void reassign(TreeNode& node, const Dataset& dataset, RowSpan rows) {
  node.class_counts = counts_of(dataset, rows);
  if (node.is_leaf()) return;
  auto parts = route_rows(node, dataset, rows);
  for (std::size_t b = 0; b < node.children.size(); ++b) {
    reassign(node.children[b], dataset, parts[b]);
  }
}

void prune_node(TreeNode& node, const Dataset& dataset, RowSpan rows,
                double cf) {
  if (node.is_leaf()) return;
  auto parts = route_rows(node, dataset, rows);
  for (std::size_t b = 0; b < node.children.size(); ++b) {
    prune_node(node.children[b], dataset, parts[b], cf);
  }

  const double subtree_errors = predicted_errors(node, cf);
  const int n = node.count();
  const int majority_class = majority(node.class_counts);
  const double leaf_errors =
      leaf_estimate(n - node.class_counts[majority_class], n, cf);

  TreeNode branch = node.children[largest_child(node)];
  reassign(branch, dataset, rows);
  const double branch_errors = predicted_errors(branch, cf);

  if (leaf_errors <= branch_errors + kTieEpsilon &&
      leaf_errors <= subtree_errors + kTieEpsilon) {
    node = make_leaf(node.class_counts);
  } else if (branch_errors <= subtree_errors + kTieEpsilon) {
    node = std::move(branch);
    prune_node(node, dataset, rows, cf);
  }
}

// Probability of at most `errors` errors in n trials at error rate p.
double binomial_cdf(int errors, int n, double p) {
  if (p <= 0) return 1.0;
  if (p >= 1) return errors >= n ? 1.0 : 0.0;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_n_factorial = std::lgamma(n + 1.0);
  double sum = 0;
  for (int i = 0; i <= errors; ++i) {
    sum += std::exp(log_n_factorial - std::lgamma(i + 1.0) -
                    std::lgamma(n - i + 1.0) + i * log_p + (n - i) * log_q);
  }
  return std::min(sum, 1.0);
}

const TreeNode& leaf_for(const TreeNode& root, const Example& row) {
  const TreeNode* node = &root;
  while (!node->is_leaf()) node = &node->children[route(*node, row)];
  return *node;
}

void check_row(const DecisionTree& tree, std::span<const double> row) {
  const auto& schema = tree.schema;
  if (row.size() != schema.attribute_count()) {
    throw InputError("row has " + std::to_string(row.size()) +
                     " values; tree expects " +
                     std::to_string(schema.attribute_count()));
  }
  for (std::size_t a = 0; a < row.size(); ++a) {
    const double v = row[a];
    if (is_missing(v) || !schema.attribute(a).discrete()) continue;
    if (v < 0 || v != std::floor(v) ||
        v >= static_cast<double>(schema.attribute(a).values.size())) {
      throw InputError("value index out of range for '" +
                       schema.attribute(a).name + "'");
    }
  }
}

}  // namespace

void LearnerParams::validate() const {
  if (min_branch_instances < 1) {
    throw std::invalid_argument("min_branch_instances must be at least 1");
  }
  if (!(cf > 0 && cf < 1)) {
    throw std::invalid_argument("cf must lie strictly between 0 and 1");
  }
}

SplitTest SplitTest::grouped(std::size_t attribute,
                             std::vector<int> group_of_value) {
  SplitTest test;
  test.grouped_ = true;
  test.attribute_ = attribute;
  test.groups_ = canonical(std::move(group_of_value));
  test.branch_count_ =
      test.groups_.empty()
          ? 0
          : *std::max_element(test.groups_.begin(), test.groups_.end()) + 1;
  if (test.branch_count_ < 2) {
    throw std::invalid_argument("a grouped test needs at least two groups");
  }
  return test;
}

SplitTest SplitTest::threshold(std::size_t attribute, double cut) {
  SplitTest test;
  test.grouped_ = false;
  test.attribute_ = attribute;
  test.branch_count_ = 2;
  test.cut_ = cut;
  return test;
}

std::optional<int> SplitTest::branch_of(double value) const {
  if (is_missing(value)) return std::nullopt;
  if (!grouped_) return value <= cut_ ? 0 : 1;
  const auto index = static_cast<std::size_t>(value);
  if (value < 0 || index >= groups_.size()) {
    throw InputError("value index out of range for grouped test");
  }
  return groups_[index];
}

std::vector<std::vector<int>> SplitTest::group_members() const {
  std::vector<std::vector<int>> members(branch_count_);
  for (std::size_t v = 0; v < groups_.size(); ++v) {
    members[groups_[v]].push_back(static_cast<int>(v));
  }
  return members;
}

int TreeNode::count() const { return total(class_counts); }

int TreeNode::errors() const { return count() - class_counts[label]; }

double class_entropy(std::span<const int> counts) {
  int sum = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("negative class count");
    sum += c;
  }
  if (sum == 0) throw std::invalid_argument("all class counts are zero");
  return entropy_of(counts);
}

SplitEvaluation evaluate_split(const Dataset& dataset, const SplitTest& test) {
  const auto rows = all_rows(dataset);
  return evaluate_split(dataset, rows, test);
}

SplitEvaluation evaluate_split(const Dataset& dataset, RowSpan rows,
                               const SplitTest& test) {
  auto evaluation = evaluate_counts(branch_counts(dataset, rows, test));
  if (!evaluation) {
    throw std::invalid_argument("split has fewer than two nonempty branches");
  }
  return *evaluation;
}

std::optional<ThresholdChoice> best_threshold(const Dataset& dataset,
                                              std::size_t attribute) {
  const auto rows = all_rows(dataset);
  return best_threshold(dataset, rows, attribute, 1);
}

std::optional<ThresholdChoice> best_threshold(const Dataset& dataset,
                                              RowSpan rows,
                                              std::size_t attribute,
                                              int min_branch) {
  if (dataset.schema().attribute(attribute).discrete()) {
    throw std::invalid_argument("best_threshold needs a continuous attribute");
  }
  std::vector<std::pair<double, int>> known;
  for (auto r : rows) {
    const auto& row = dataset.row(r);
    if (!is_missing(row.values[attribute])) {
      known.emplace_back(row.values[attribute], row.label);
    }
  }
  std::sort(known.begin(), known.end());
  const std::size_t classes = dataset.schema().class_count();
  CountMatrix counts(2, std::vector<int>(classes, 0));
  for (const auto& [value, label] : known) ++counts[1][label];

  std::optional<ThresholdChoice> best;
  const int n = static_cast<int>(known.size());
  for (int i = 0; i + 1 < n; ++i) {
    ++counts[0][known[i].second];
    --counts[1][known[i].second];
    const double lo = known[i].first;
    const double hi = known[i + 1].first;
    if (!(lo < hi)) continue;
    if (i + 1 < min_branch || n - i - 1 < min_branch) continue;
    auto evaluation = evaluate_counts(counts);
    if (!best || evaluation->gain > best->evaluation.gain + kTieEpsilon) {
      double cut = lo + (hi - lo) / 2;
      if (!(cut < hi)) cut = lo;
      best = ThresholdChoice{cut, *evaluation};
    }
  }
  return best;
}

SplitTest singleton_partition(const Dataset& dataset, RowSpan rows,
                              std::size_t attribute) {
  const auto by_value = value_counts(dataset, rows, attribute);
  return SplitTest::grouped(
      attribute, assignment_of(initial_groups(by_value), by_value.size()));
}

std::optional<SplitTest> best_partition(const Dataset& dataset, RowSpan rows,
                                        std::size_t attribute,
                                        int min_branch) {
  const auto by_value = value_counts(dataset, rows, attribute);
  std::vector<int> observed;
  std::vector<int> unobserved;
  for (std::size_t v = 0; v < by_value.size(); ++v) {
    (total(by_value[v]) > 0 ? observed : unobserved)
        .push_back(static_cast<int>(v));
  }
  if (observed.size() < 2) {
    throw std::invalid_argument("fewer than two observed values");
  }
  if (observed.size() > kMaxExhaustiveValues) {
    throw std::invalid_argument("too many observed values for exhaustive "
                                "grouping");
  }

  std::optional<SplitTest> best;
  double best_ratio = 0;
  std::vector<int> best_key;
  // Restricted growth strings enumerate every set partition once.
  const std::size_t m = observed.size();
  std::vector<int> block(m, 0);
  std::vector<int> highest(m, 0);
  while (true) {
    const int blocks = highest[m - 1] + 1;
    if (blocks >= 2) {
      std::vector<std::vector<int>> members(blocks);
      for (std::size_t i = 0; i < m; ++i) members[block[i]].push_back(observed[i]);
      auto counts = group_counts(by_value, members);
      const bool large_enough =
          std::all_of(counts.begin(), counts.end(), [&](const auto& branch) {
            return total(branch) >= min_branch;
          });
      if (large_enough) {
        const auto evaluation = evaluate_counts(counts);
        std::size_t largest = 0;
        for (std::size_t g = 1; g < counts.size(); ++g) {
          if (total(counts[g]) > total(counts[largest])) largest = g;
        }
        for (int v : unobserved) members[largest].push_back(v);
        auto key = canonical(assignment_of(members, by_value.size()));
        const bool better =
            !best || evaluation->gain_ratio > best_ratio + kTieEpsilon;
        const bool tied =
            best && std::abs(evaluation->gain_ratio - best_ratio) <=
                        kTieEpsilon && key < best_key;
        if (better || tied) {
          best = SplitTest::grouped(attribute, key);
          best_ratio = evaluation->gain_ratio;
          best_key = std::move(key);
        }
      }
    }
    // Next restricted growth string.
    std::size_t i = m - 1;
    while (i > 0 && block[i] > highest[i - 1]) --i;
    if (i == 0) break;
    ++block[i];
    highest[i] = std::max(highest[i - 1], block[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      block[j] = 0;
      highest[j] = highest[i];
    }
  }
  return best;
}

SplitTest group_values(const Dataset& dataset, std::size_t attribute) {
  const auto rows = all_rows(dataset);
  return group_values(dataset, rows, attribute);
}

SplitTest group_values(const Dataset& dataset, RowSpan rows,
                       std::size_t attribute) {
  const auto by_value = value_counts(dataset, rows, attribute);
  auto members = initial_groups(by_value);
  double current = evaluate_counts(group_counts(by_value, members))->gain_ratio;

  while (members.size() > 2) {
    std::optional<double> best_ratio;
    std::vector<std::vector<int>> best_members;
    std::vector<int> best_key;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto merged = members;
        merged[i].insert(merged[i].end(), merged[j].begin(), merged[j].end());
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(j));
        const double ratio =
            evaluate_counts(group_counts(by_value, merged))->gain_ratio;
        auto key = canonical(assignment_of(merged, by_value.size()));
        const bool better = !best_ratio || ratio > *best_ratio + kTieEpsilon;
        const bool tied = best_ratio &&
                          std::abs(ratio - *best_ratio) <= kTieEpsilon &&
                          key < best_key;
        if (better || tied) {
          best_ratio = ratio;
          best_members = std::move(merged);
          best_key = std::move(key);
        }
      }
    }
    if (*best_ratio + kTieEpsilon < current) break;
    members = std::move(best_members);
    current = *best_ratio;
  }
  return SplitTest::grouped(attribute, assignment_of(members, by_value.size()));
}

DecisionTree build_tree(const Dataset& dataset, const LearnerParams& params) {
  params.validate();
  if (dataset.empty()) throw InputError("cannot build a tree from no rows");
  TreeBuilder builder(dataset, params);
  return DecisionTree{dataset.schema(), params,
                      builder.grow(all_rows(dataset))};
}

double ucf(int errors, int n, double cf) {
  if (n < 1 || errors < 0 || errors > n) {
    throw std::invalid_argument("ucf needs 0 <= errors <= n and n >= 1");
  }
  if (!(cf > 0 && cf < 1)) {
    throw std::invalid_argument("ucf needs 0 < cf < 1");
  }
  if (errors == n) return 1.0;
  // The tail probability falls monotonically from 1 at p = 0 to 0 at p = 1.
  double lo = 0;
  double hi = 1;
  while (hi - lo > 1e-12) {
    const double mid = lo + (hi - lo) / 2;
    if (binomial_cdf(errors, n, mid) > cf) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

double predicted_errors(const TreeNode& node, double cf) {
  if (node.is_leaf()) return leaf_estimate(node.errors(), node.count(), cf);
  double sum = 0;
  for (const auto& child : node.children) sum += predicted_errors(child, cf);
  return sum;
}

DecisionTree prune(const DecisionTree& tree, const Dataset& training,
                   double cf) {
  if (!(cf > 0 && cf < 1)) {
    throw std::invalid_argument("cf must lie strictly between 0 and 1");
  }
  DecisionTree pruned = tree;
  const auto rows = all_rows(training);
  reassign(pruned.root, training, rows);
  prune_node(pruned.root, training, rows, cf);
  return pruned;
}

DecisionTree train(const Dataset& dataset, const LearnerParams& params) {
  return prune(build_tree(dataset, params), dataset, params.cf);
}

Classification classify(const DecisionTree& tree,
                        std::span<const double> row) {
  check_row(tree, row);
  Example example{std::vector<double>(row.begin(), row.end()), 0};
  const TreeNode& leaf = leaf_for(tree.root, example);
  Classification result;
  result.label = leaf.label;
  result.distribution.assign(leaf.class_counts.size(), 0.0);
  const int n = leaf.count();
  if (n == 0) {
    result.distribution[leaf.label] = 1.0;
  } else {
    for (std::size_t c = 0; c < leaf.class_counts.size(); ++c) {
      result.distribution[c] = static_cast<double>(leaf.class_counts[c]) / n;
    }
  }
  return result;
}

double TestEstimate::error_percent() const {
  return rows == 0 ? 0.0 : 100.0 * errors / rows;
}

double TestEstimate::predicted_percent() const {
  return rows == 0 ? 0.0 : 100.0 * predicted_errors / rows;
}

TestEstimate test_tree(const DecisionTree& tree, const Dataset& dataset,
                       double cf) {
  if (!(dataset.schema() == tree.schema)) {
    throw InputError("dataset schema does not match the tree");
  }
  std::map<const TreeNode*, std::pair<int, int>> per_leaf;
  TestEstimate estimate;
  for (const auto& row : dataset.rows()) {
    const TreeNode& leaf = leaf_for(tree.root, row);
    auto& [n, e] = per_leaf[&leaf];
    ++n;
    ++estimate.rows;
    if (leaf.label != row.label) {
      ++e;
      ++estimate.errors;
    }
  }
  // Sum in tree order rather than pointer order so results are reproducible.
  std::deque<const TreeNode*> queue{&tree.root};
  while (!queue.empty()) {
    const TreeNode* node = queue.front();
    queue.pop_front();
    if (node->is_leaf()) {
      if (auto it = per_leaf.find(node); it != per_leaf.end()) {
        estimate.predicted_errors +=
            leaf_estimate(it->second.second, it->second.first, cf);
      }
      continue;
    }
    for (const auto& child : node->children) queue.push_back(&child);
  }
  return estimate;
}

int node_count(const TreeNode& node) {
  int count = 1;
  for (const auto& child : node.children) count += node_count(child);
  return count;
}

int depth(const TreeNode& node) {
  int deepest = 0;
  for (const auto& child : node.children) {
    deepest = std::max(deepest, depth(child) + 1);
  }
  return deepest;
}

TreeSummary summarize(const DecisionTree& tree) {
  TreeSummary summary;
  summary.node_count = node_count(tree.root);
  if (!tree.root.is_leaf()) {
    summary.root_attribute =
        tree.schema.attribute(tree.root.test->attribute()).name;
  }
  std::deque<std::pair<const TreeNode*, int>> queue{{&tree.root, 0}};
  while (!queue.empty() && summary.features.size() < kSummaryFeatures) {
    auto [node, level] = queue.front();
    queue.pop_front();
    if (node->is_leaf()) continue;
    const auto& name = tree.schema.attribute(node->test->attribute()).name;
    const bool seen = std::any_of(
        summary.features.begin(), summary.features.end(),
        [&](const LevelFeature& f) { return f.name == name; });
    if (!seen) summary.features.push_back({name, level});
    for (const auto& child : node->children) {
      queue.emplace_back(&child, level + 1);
    }
  }
  return summary;
}

}  // namespace cuelearn::induction
