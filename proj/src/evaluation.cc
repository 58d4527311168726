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

#include "cuelearn/evaluation.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "cuelearn/error.h"
#include "random_util.h"

namespace cuelearn::evaluation {
namespace {

using internal::shuffle;

// Two-sided 95% critical values of Student's t, df = 1..30.
constexpr std::array<double, 30> kT95 = {
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
    2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};

void check_folds(std::size_t n, int k) {
  if (k < 2) throw InfeasibleError("k must be at least 2");
  if (static_cast<std::size_t>(k) > n) {
    throw InfeasibleError("k = " + std::to_string(k) + " exceeds " +
                          std::to_string(n) + " rows");
  }
}

}  // namespace

double majority_baseline(const Dataset& dataset) {
  if (dataset.empty()) throw InputError("baseline of an empty dataset");
  const auto counts = dataset.class_counts();
  const int top = *std::max_element(counts.begin(), counts.end());
  return 100.0 * static_cast<double>(dataset.size() - top) / dataset.size();
}

std::vector<int> kfold(std::size_t n, int k, std::uint64_t seed) {
  std::vector<int> labels(n, 0);
  return kfold(labels, k, seed, false);
}

std::vector<int> kfold(std::span<const int> labels, int k, std::uint64_t seed,
                       bool stratify) {
  const std::size_t n = labels.size();
  check_folds(n, k);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (stratify) {
    // Shuffle within each class, then lay classes out one after another;
    // dealing the sequence round-robin balances every class across folds.
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return labels[a] < labels[b];
    });
    auto begin = order.begin();
    while (begin != order.end()) {
      auto end = std::find_if(begin, order.end(), [&](auto i) {
        return labels[i] != labels[*begin];
      });
      std::vector<std::size_t> block(begin, end);
      shuffle(block, rng);
      std::copy(block.begin(), block.end(), begin);
      begin = end;
    }
  } else {
    shuffle(order, rng);
  }
  std::vector<int> folds(n);
  for (std::size_t i = 0; i < n; ++i) {
    folds[order[i]] = static_cast<int>(i % static_cast<std::size_t>(k));
  }
  return folds;
}

double t_critical_95(int df) {
  if (df < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
  if (df <= static_cast<int>(kT95.size())) return kT95[df - 1];
  return 1.960;
}

Interval ci95(std::span<const double> samples) {
  const std::size_t k = samples.size();
  if (k < 2) throw std::invalid_argument("ci95 needs at least two samples");
  if (std::all_of(samples.begin(), samples.end(),
                  [&](double x) { return x == samples.front(); })) {
    return {samples.front(), 0.0};
  }
  const double mean =
      std::accumulate(samples.begin(), samples.end(), 0.0) / k;
  double squares = 0;
  for (double x : samples) squares += (x - mean) * (x - mean);
  const double sd = std::sqrt(squares / (k - 1));
  return {mean, t_critical_95(static_cast<int>(k) - 1) * sd /
                    std::sqrt(static_cast<double>(k))};
}

bool significantly_better(const Interval& a, const Interval& b) {
  return a.upper() < b.lower();
}

double error_reduction(double baseline, const Interval& best) {
  if (!(baseline > 0)) {
    throw std::invalid_argument("error reduction needs a positive baseline");
  }
  return 100.0 * (baseline - best.upper()) / baseline;
}

ChiSquare chi_square_2x2(long long a, long long b, long long c, long long d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    throw std::invalid_argument("contingency counts must be nonnegative");
  }
  const double rows[2] = {static_cast<double>(a + b),
                          static_cast<double>(c + d)};
  const double cols[2] = {static_cast<double>(a + c),
                          static_cast<double>(b + d)};
  if (rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) {
    throw std::invalid_argument("contingency table has a zero marginal");
  }
  const double n = rows[0] + rows[1];
  const double observed[2][2] = {{static_cast<double>(a), static_cast<double>(b)},
                                 {static_cast<double>(c), static_cast<double>(d)}};
  ChiSquare result;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double expected = rows[i] * cols[j] / n;
      const double diff = observed[i][j] - expected;
      result.statistic += diff * diff / expected;
    }
  }
  result.significant_at_001 = result.statistic > kChiSquare001Df1;
  return result;
}

CvResult cross_validate(const Dataset& dataset,
                        const induction::LearnerParams& params,
                        const CvOptions& options) {
  params.validate();
  std::vector<int> labels;
  labels.reserve(dataset.size());
  for (const auto& row : dataset.rows()) labels.push_back(row.label);
  const auto folds = kfold(labels, options.k, options.seed, options.stratify);

  struct FoldOutcome {
    double error;
    double estimated;
    int nodes;
  };
  auto run_fold = [&](int fold) {
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
    for (std::size_t i = 0; i < folds.size(); ++i) {
      (folds[i] == fold ? test_rows : train_rows).push_back(i);
    }
    if (test_rows.empty() || train_rows.empty()) {
      throw InfeasibleError("fold " + std::to_string(fold) + " has no rows");
    }
    const auto tree = induction::train(select_rows(dataset, train_rows), params);
    const auto result =
        induction::test_tree(tree, select_rows(dataset, test_rows), params.cf);
    return FoldOutcome{result.error_percent(), result.predicted_percent(),
                       induction::node_count(tree.root)};
  };

  std::vector<std::future<FoldOutcome>> pending;
  for (int fold = 0; fold < options.k; ++fold) {
    pending.push_back(std::async(std::launch::async, run_fold, fold));
  }
  CvResult result;
  for (auto& future : pending) {
    const auto outcome = future.get();
    result.fold_errors.push_back(outcome.error);
    result.fold_estimated.push_back(outcome.estimated);
    result.fold_nodes.push_back(outcome.nodes);
  }
  const auto observed = ci95(result.fold_errors);
  const auto estimated = ci95(result.fold_estimated);
  result.mean_error = observed.mean;
  result.halfwidth95 = observed.halfwidth;
  result.mean_estimated = estimated.mean;
  result.estimated_halfwidth95 = estimated.halfwidth;
  result.mean_nodes =
      std::accumulate(result.fold_nodes.begin(), result.fold_nodes.end(), 0.0) /
      options.k;
  return result;
}

Interval fold_baseline(const Dataset& dataset, const CvOptions& options) {
  std::vector<int> labels;
  labels.reserve(dataset.size());
  for (const auto& row : dataset.rows()) labels.push_back(row.label);
  const auto folds = kfold(labels, options.k, options.seed, options.stratify);
  std::vector<double> errors;
  for (int fold = 0; fold < options.k; ++fold) {
    std::vector<int> train(dataset.schema().class_count(), 0);
    std::vector<int> test(dataset.schema().class_count(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      ++(folds[i] == fold ? test : train)[labels[i]];
    }
    const auto majority = std::max_element(train.begin(), train.end()) -
                          train.begin();
    const int held_out = std::accumulate(test.begin(), test.end(), 0);
    errors.push_back(100.0 * (held_out - test[majority]) / held_out);
  }
  return ci95(errors);
}

}  // namespace cuelearn::evaluation
