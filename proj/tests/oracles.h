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

// Independent reference computations for tests. Nothing here calls into the
// library under test except for the plain data types.

#ifndef CUELEARN_TESTS_ORACLES_H_
#define CUELEARN_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cuelearn/dataset.h"

namespace oracle {

inline double entropy(const std::vector<int>& counts) {
  long total = 0;
  for (int c : counts) total += c;
  if (total == 0) return 0;
  double h = 0;
  for (int c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h += -p * std::log(p) / std::log(2.0);
  }
  return h;
}

struct Split {
  double gain = 0;
  double split_info = 0;
  double ratio = 0;
};

// branches[b][c]: rows of class c in branch b.
inline Split score(const std::vector<std::vector<int>>& branches) {
  std::vector<int> parent(branches.front().size(), 0);
  std::vector<int> sizes;
  int n = 0;
  for (const auto& b : branches) {
    int size = 0;
    for (std::size_t c = 0; c < b.size(); ++c) {
      parent[c] += b[c];
      size += b[c];
    }
    sizes.push_back(size);
    n += size;
  }
  double remainder = 0;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    remainder += static_cast<double>(sizes[b]) / n * entropy(branches[b]);
  }
  Split s;
  s.gain = entropy(parent) - remainder;
  s.split_info = entropy(sizes);
  s.ratio = s.split_info > 0 ? s.gain / s.split_info : 0;
  return s;
}

// Every set partition of {0..m-1}, as block labels, by recursion.
inline void partitions(int m, std::vector<int>& labels, int i, int blocks,
                       std::vector<std::vector<int>>& out) {
  if (i == m) {
    out.push_back(labels);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    labels[i] = b;
    partitions(m, labels, i + 1, std::max(blocks, b + 1), out);
  }
}

inline std::vector<std::vector<int>> partitions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(m, 0);
  partitions(m, labels, 0, 0, out);
  return out;
}

struct RootChoice {
  bool leaf = true;
  double ratio = 0;
};

// Best root test by exhaustive search: every partition of the observed
// values of each discrete attribute and every midpoint of each continuous
// attribute, keeping tests whose branches all hold >= min_branch rows. Zero
// gain tests are admissible. Per attribute the discrete candidate is the highest
// ratio partition and the continuous candidate the highest gain cut; with
// the guard on, candidates below the mean candidate gain are dropped; the
// answer is the highest remaining ratio.
inline RootChoice exhaustive_root(const cuelearn::Dataset& ds, int min_branch,
                                  bool guard) {
  const auto& schema = ds.schema();
  const int classes = static_cast<int>(schema.class_count());
  const int n = static_cast<int>(ds.size());
  RootChoice none;
  std::vector<int> parent(classes, 0);
  for (const auto& r : ds.rows()) ++parent[r.label];
  int nonzero = 0;
  for (int c : parent) nonzero += c > 0;
  if (nonzero <= 1 || n < 2 * min_branch) return none;

  struct Cand {
    double gain;
    double ratio;
  };
  std::vector<Cand> cands;
  for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
    std::optional<Cand> best;
    if (schema.attribute(a).discrete()) {
      std::vector<int> observed;
      for (const auto& r : ds.rows()) {
        const int v = static_cast<int>(r.values[a]);
        if (std::find(observed.begin(), observed.end(), v) == observed.end()) {
          observed.push_back(v);
        }
      }
      if (observed.size() < 2) continue;
      for (const auto& labels : partitions(static_cast<int>(observed.size()))) {
        const int k = *std::max_element(labels.begin(), labels.end()) + 1;
        if (k < 2) continue;
        std::vector<std::vector<int>> branches(k, std::vector<int>(classes, 0));
        for (const auto& r : ds.rows()) {
          const int v = static_cast<int>(r.values[a]);
          const auto pos = std::find(observed.begin(), observed.end(), v) -
                           observed.begin();
          ++branches[labels[pos]][r.label];
        }
        bool ok = true;
        for (const auto& b : branches) {
          ok = ok && std::accumulate(b.begin(), b.end(), 0) >= min_branch;
        }
        if (!ok) continue;
        const auto s = score(branches);
        if (!best || s.ratio > best->ratio) best = Cand{s.gain, s.ratio};
      }
    } else {
      std::vector<double> values;
      for (const auto& r : ds.rows()) values.push_back(r.values[a]);
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const double cut = (values[i] + values[i + 1]) / 2;
        std::vector<std::vector<int>> branches(2, std::vector<int>(classes, 0));
        for (const auto& r : ds.rows()) ++branches[r.values[a] > cut][r.label];
        const int left = std::accumulate(branches[0].begin(), branches[0].end(), 0);
        if (left < min_branch || n - left < min_branch) continue;
        const auto s = score(branches);
        if (!best || s.gain > best->gain) best = Cand{s.gain, s.ratio};
      }
    }
    if (best) cands.push_back(*best);
  }
  if (cands.empty()) return none;
  double mean = 0;
  for (const auto& c : cands) mean += c.gain;
  mean /= static_cast<double>(cands.size());
  RootChoice choice;
  choice.leaf = false;
  choice.ratio = -1;
  for (const auto& c : cands) {
    if (guard && c.gain < mean - 1e-12) continue;
    choice.ratio = std::max(choice.ratio, c.ratio);
  }
  return choice;
}

// P(X <= e) for X ~ Binomial(n, p), by direct summation of the terms.
inline double binomial_cdf(int e, int n, double p) {
  double sum = 0;
  for (int x = 0; x <= e; ++x) {
    double log_term = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) -
                      std::lgamma(n - x + 1.0);
    if (x > 0) log_term += x * std::log(p);
    if (n - x > 0) log_term += (n - x) * std::log1p(-p);
    sum += std::exp(log_term);
  }
  return sum;
}

// Upper confidence limit by plain bisection on the CDF.
inline double ucf(int e, int n, double cf) {
  if (e == n) return 1.0;
  double lo = 0, hi = 1;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (binomial_cdf(e, n, mid) > cf ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

inline double mean(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double sample_sd(const std::vector<double>& xs) {
  const double m = mean(xs);
  double s = 0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

// Two-sided 95% Student t quantiles, df 1..30, as printed in standard tables.
inline double t95(int df) {
  static const double table[] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  return df <= 30 ? table[df - 1] : 1.960;
}

inline double ci95_halfwidth(const std::vector<double>& xs) {
  return t95(static_cast<int>(xs.size()) - 1) * sample_sd(xs) /
         std::sqrt(static_cast<double>(xs.size()));
}

// Pearson statistic from observed and expected cells.
inline double chi_square(long a, long b, long c, long d) {
  const double n = static_cast<double>(a + b + c + d);
  const double obs[4] = {double(a), double(b), double(c), double(d)};
  const double row[2] = {double(a + b), double(c + d)};
  const double col[2] = {double(a + c), double(b + d)};
  double x = 0;
  for (int i = 0; i < 4; ++i) {
    const double expected = row[i / 2] * col[i % 2] / n;
    x += (obs[i] - expected) * (obs[i] - expected) / expected;
  }
  return x;
}

}  // namespace oracle

#endif  // CUELEARN_TESTS_ORACLES_H_
