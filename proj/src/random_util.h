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

// Portable random helpers. std::shuffle and the standard distributions are
// not specified bit-for-bit, so seeded runs would differ across standard
// libraries; mt19937_64 output itself is fully specified.

#ifndef CUELEARN_SRC_RANDOM_UTIL_H_
#define CUELEARN_SRC_RANDOM_UTIL_H_

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace cuelearn::internal {

// Uniform draw in [0, bound) by rejection.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[draw_below(rng, i)]);
  }
}

}  // namespace cuelearn::internal

#endif  // CUELEARN_SRC_RANDOM_UTIL_H_
