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

// Baselines, cross-validation and the statistics used to compare error rates.

#ifndef CUELEARN_EVALUATION_H_
#define CUELEARN_EVALUATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cuelearn/dataset.h"
#include "cuelearn/induction.h"

namespace cuelearn::evaluation {

// Error percentage of always predicting the most frequent class. Ties go to
// the earlier declared class. Throws InputError on an empty dataset.
double majority_baseline(const Dataset& dataset);

// Fold index for every row. Folds partition 0..n-1 with sizes differing by at
// most one; when stratified, each class is also spread so its per-fold counts
// differ by at most one. Deterministic in seed. Throws InfeasibleError unless
// 2 <= k <= n.
std::vector<int> kfold(std::size_t n, int k, std::uint64_t seed);
std::vector<int> kfold(std::span<const int> labels, int k, std::uint64_t seed,
                       bool stratify);

struct Interval {
  double mean = 0;
  double halfwidth = 0;

  double lower() const { return mean - halfwidth; }
  double upper() const { return mean + halfwidth; }
  bool operator==(const Interval&) const = default;
};

// Two-sided 95% Student t critical value. Exact table for df 1..30; the
// normal value 1.960 beyond.
double t_critical_95(int df);

// Mean and t-based 95% half-width of the samples (sample standard deviation
// with divisor k-1). Throws std::invalid_argument for fewer than two samples.
Interval ci95(std::span<const double> samples);

// True iff a's upper bound lies strictly below b's lower bound.
bool significantly_better(const Interval& a, const Interval& b);

// Percentage reduction from the baseline to the best interval's upper
// bound. Throws std::invalid_argument for a nonpositive baseline.
double error_reduction(double baseline, const Interval& best);

struct ChiSquare {
  double statistic = 0;
  int df = 1;
  bool significant_at_001 = false;
};

inline constexpr double kChiSquare001Df1 = 10.828;

// Pearson chi-square for the table [[a, b], [c, d]] without continuity
// correction. Throws std::invalid_argument when a row or column sums to 0.
ChiSquare chi_square_2x2(long long a, long long b, long long c, long long d);

struct CvOptions {
  int k = 10;
  std::uint64_t seed = 0;
  bool stratify = true;

  bool operator==(const CvOptions&) const = default;
};

struct CvResult {
  // Observed error percentage of the pruned tree on each held-out fold.
  std::vector<double> fold_errors;
  // Pessimistic (upper-confidence) error percentage on each held-out fold.
  std::vector<double> fold_estimated;
  std::vector<int> fold_nodes;
  double mean_error = 0;
  double halfwidth95 = 0;
  double mean_estimated = 0;
  double estimated_halfwidth95 = 0;
  double mean_nodes = 0;

  Interval observed() const { return {mean_error, halfwidth95}; }
  Interval estimated() const { return {mean_estimated, estimated_halfwidth95}; }
  bool operator==(const CvResult&) const = default;
};

// Trains and prunes on each fold's complement and tests on the fold. Folds
// may run concurrently; results are stored by fold index. Throws
// InfeasibleError when the dataset has fewer rows than folds.
CvResult cross_validate(const Dataset& dataset,
                        const induction::LearnerParams& params,
                        const CvOptions& options = {});

// Majority-class error measured per fold: the majority class of each
// training part, scored on its held-out part. Same folds as cross_validate.
Interval fold_baseline(const Dataset& dataset, const CvOptions& options = {});

}  // namespace cuelearn::evaluation

#endif  // CUELEARN_EVALUATION_H_
