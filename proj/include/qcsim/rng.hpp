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

#include <cstdint>
#include <random>

namespace qcsim {

/// Counter-based generator: the n-th output is a pure function of
/// (seed, stream, n), so independent purposes get independent, reproducible
/// streams regardless of how many draws other streams made.
class Rng {
 public:
  enum Stream : std::uint64_t { kMeasure = 1, kNoise = 2, kEvents = 3, kTest = 99 };

  explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0)
      : seed_(seed), key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t position() const { return counter_; }

  Rng split(std::uint64_t stream) const { return Rng(seed_, stream); }

  std::uint64_t next_u64() { return mix(key_ + mix(counter_++ * 0x9e3779b97f4a7c15ULL + key_)); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Seed from the operating system's entropy source.
  static std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace qcsim
