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
#include <stdexcept>

namespace qcsim {

template <typename Scan>
std::vector<Index> sample_blocks(std::span<const double> block_mass, Index block_size,
                                 std::int64_t count, Rng& rng, Scan&& scan) {
  if (count <= 0) throw std::invalid_argument("sample: count must be positive");
  std::vector<double> prefix(block_mass.size());
  double running = 0.0;
  for (std::size_t b = 0; b < block_mass.size(); ++b) {
    running += block_mass[b];
    prefix[b] = running;
  }
  const double total = running;
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t e = 0; e < count; ++e) {
    const double target = rng.uniform() * total;
    auto it = std::upper_bound(prefix.begin(), prefix.end(), target);
    // Rounding can put target at the very end; fall back to the last block
    // with mass.
    while (it == prefix.end() || block_mass[static_cast<std::size_t>(it - prefix.begin())] == 0.0) {
      if (it == prefix.begin()) break;
      --it;
    }
    const auto block = static_cast<std::size_t>(it - prefix.begin());
    const double before = block == 0 ? 0.0 : prefix[block - 1];
    out.push_back(static_cast<Index>(block) * block_size + scan(block, target - before));
  }
  return out;
}

}  // namespace qcsim
