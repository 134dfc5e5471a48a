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

#include "qcsim/shor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcsim/bits.hpp"

namespace qcsim {

std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = modmul(result, base, m);
    base = modmul(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::optional<std::uint64_t> classical_order(std::uint64_t y, std::uint64_t modulus) {
  if (std::gcd(y, modulus) != 1) return std::nullopt;
  std::uint64_t v = y % modulus;
  for (std::uint64_t r = 1; r <= modulus; ++r) {
    if (v == 1 % modulus) return r;
    v = modmul(v, y, modulus);
  }
  return std::nullopt;
}

void check_shorbox(int n_qubits, const ShorParams& params) {
  if (params.modulus < 2 || params.modulus >= (std::uint64_t{1} << 32)) {
    throw ExecutionError("SHORBOX: modulus must satisfy 2 <= G < 2^32");
  }
  const int f_bits = bits::ceil_log2(params.modulus);
  if (params.n_x < 1 || params.n_x + f_bits > n_qubits) {
    throw ExecutionError("SHORBOX: register too small (n_x=" + std::to_string(params.n_x) +
                         " plus " + std::to_string(f_bits) + " f-register qubits exceed " +
                         std::to_string(n_qubits) + ")");
  }
}

std::vector<std::uint64_t> convergent_denominators(std::uint64_t c, int bits, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  unsigned __int128 num = c;
  unsigned __int128 den = static_cast<unsigned __int128>(1) << bits;
  // k_{-2} = 1, k_{-1} = 0
  unsigned __int128 k_prev2 = 1;
  unsigned __int128 k_prev1 = 0;
  while (den != 0) {
    const unsigned __int128 a = num / den;
    const unsigned __int128 k = a * k_prev1 + k_prev2;
    if (k > limit) break;
    if (k > 0 && (out.empty() || out.back() != static_cast<std::uint64_t>(k))) {
      out.push_back(static_cast<std::uint64_t>(k));
    }
    k_prev2 = k_prev1;
    k_prev1 = k;
    const unsigned __int128 rem = num - a * den;
    num = den;
    den = rem;
  }
  return out;
}

ShorOutcome shor_postprocess(const std::vector<std::uint64_t>& samples, const ShorParams& params) {
  ShorOutcome out;
  out.samples = samples;
  const std::uint64_t g = params.modulus;
  const std::uint64_t y = params.base % g;
  if (std::gcd(y, g) != 1) {
    out.failure = "gcd(y, G) != 1; the base already shares a factor with G";
    return out;
  }
  constexpr std::uint64_t kMaxMultiple = 8;
  std::optional<std::uint64_t> best;
  for (std::uint64_t c : samples) {
    for (std::uint64_t d : convergent_denominators(c, params.n_x, g)) {
      for (std::uint64_t m = 1; m <= kMaxMultiple && d * m <= g; ++m) {
        const std::uint64_t r = d * m;
        if (modpow(y, r, g) == 1 % g) {
          if (!best || r < *best) best = r;
          break;
        }
      }
    }
  }
  if (!best) {
    out.failure = "no sample yielded a period";
    return out;
  }
  const std::uint64_t r = *best;
  out.period = r;
  if (r % 2 != 0) {
    out.failure = "period is odd";
    out.retry_with_new_base = true;
    return out;
  }
  const std::uint64_t half = modpow(y, r / 2, g);
  if (half == g - 1) {
    out.failure = "y^(r/2) = -1 mod G";
    out.retry_with_new_base = true;
    return out;
  }
  for (std::uint64_t candidate : {std::gcd(half + g - 1, g), std::gcd(half + 1, g)}) {
    if (candidate > 1 && candidate < g) {
      const std::uint64_t p = std::min(candidate, g / candidate);
      out.factors = std::make_pair(p, g / p);
      return out;
    }
  }
  out.failure = "gcd(y^(r/2) +- 1, G) is trivial";
  out.retry_with_new_base = true;
  return out;
}

std::vector<std::uint64_t> x_register_samples(const EventList& events, int n_x) {
  std::vector<std::uint64_t> out;
  out.reserve(events.events.size());
  const std::uint64_t mask = (std::uint64_t{1} << n_x) - 1;
  for (Index e : events.events) out.push_back(e & mask);
  return out;
}

nlohmann::json to_json(const ShorOutcome& outcome) {
  nlohmann::json j;
  j["samples"] = outcome.samples.size();
  j["period"] = outcome.period ? nlohmann::json(*outcome.period) : nlohmann::json(nullptr);
  if (outcome.factors) {
    j["factors"] = {outcome.factors->first, outcome.factors->second};
  } else {
    j["factors"] = nullptr;
  }
  j["failure"] = outcome.failure;
  j["retry_with_new_base"] = outcome.retry_with_new_base;
  return j;
}

std::string format_shor(const ShorOutcome& outcome, const ShorParams& params) {
  std::ostringstream os;
  os << "SHOR G=" << params.modulus << " y=" << params.base << " samples=" << outcome.samples.size();
  if (outcome.period) os << " period=" << *outcome.period;
  if (outcome.factors) {
    os << " factors=" << outcome.factors->first << "x" << outcome.factors->second;
  } else {
    os << " failed: " << outcome.failure;
    if (outcome.retry_with_new_base) os << " (retry with a new y)";
  }
  os << '\n';
  return os.str();
}

}  // namespace qcsim
