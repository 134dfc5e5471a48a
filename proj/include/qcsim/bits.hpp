// Copyright 2026 The qcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>

#include "qcsim/types.hpp"

namespace qcsim::bits {

constexpr Index pow2(int n) { return Index{1} << n; }

constexpr bool test(Index value, int bit) { return (value >> bit) & 1U; }

constexpr Index flip(Index value, int bit) { return value ^ pow2(bit); }

/// Spreads `value` so that a zero appears at bit position `bit`.
constexpr Index insert_zero(Index value, int bit) {
  const Index low = value & (pow2(bit) - 1);
  return ((value >> bit) << (bit + 1)) | low;
}

/// Inserts zeros at every position in `sorted_bits` (ascending).
template <std::size_t K>
constexpr Index insert_zeros(Index value, const std::array<int, K>& sorted_bits) {
  for (int b : sorted_bits) value = insert_zero(value, b);
  return value;
}

template <std::size_t K>
constexpr std::array<int, K> sorted(std::array<int, K> positions) {
  std::sort(positions.begin(), positions.end());
  return positions;
}

/// Swaps the bits at positions a and b.
constexpr Index swap_bits(Index value, int a, int b) {
  if (test(value, a) == test(value, b)) return value;
  return value ^ (pow2(a) | pow2(b));
}

constexpr int ceil_log2(std::uint64_t value) {
  return value <= 1 ? 0 : 64 - std::countl_zero(value - 1);
}

}  // namespace qcsim::bits
