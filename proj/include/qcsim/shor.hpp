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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcsim/circuit.hpp"
#include "qcsim/run_result.hpp"

namespace qcsim {

/// a * b mod m for m < 2^32 (also correct for any m with 128-bit products).
inline std::uint64_t modmul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Smallest r > 0 with y^r = 1 mod G by brute force; nullopt when gcd(y, G) != 1.
std::optional<std::uint64_t> classical_order(std::uint64_t y, std::uint64_t modulus);

/// Checks that a SHORBOX fits an n-qubit register. Throws ExecutionError.
void check_shorbox(int n_qubits, const ShorParams& params);

/// Calls visit(index) for every basis index x + 2^{n_x} (y^x mod G) that
/// SHORBOX populates, in increasing x.
template <typename Visit>
void for_each_shor_state(const ShorParams& p, Visit&& visit) {
  std::uint64_t f = 1 % p.modulus;
  const std::uint64_t count = std::uint64_t{1} << p.n_x;
  for (std::uint64_t x = 0; x < count; ++x) {
    visit(x + (f << p.n_x));
    f = modmul(f, p.base, p.modulus);
  }
}

/// Continued-fraction convergent denominators of c / 2^bits, at most `limit`.
std::vector<std::uint64_t> convergent_denominators(std::uint64_t c, int bits, std::uint64_t limit);

struct ShorOutcome {
  std::vector<std::uint64_t> samples;  // x-register values
  std::optional<std::uint64_t> period;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  /// Empty on success; otherwise why no factors were produced.
  std::string failure;
  bool retry_with_new_base = false;
};

/// Period finding and factor extraction from sampled x-register values.
ShorOutcome shor_postprocess(const std::vector<std::uint64_t>& samples, const ShorParams& params);

/// Extracts the x-register values (low n_x bits) of sampled events.
std::vector<std::uint64_t> x_register_samples(const EventList& events, int n_x);

nlohmann::json to_json(const ShorOutcome& outcome);
std::string format_shor(const ShorOutcome& outcome, const ShorParams& params);

}  // namespace qcsim
