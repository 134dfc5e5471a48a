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

#include "qcsim/kernels.hpp"

#include <omp.h>

#include <vector>

#include "qcsim/bits.hpp"

namespace qcsim::kernels {

namespace {

thread_local int t_budget = 0;

// Per-group arithmetic shared by both implementations so that they agree
// bit for bit.
inline void update_pair(Complex& a0, Complex& a1, const GateMatrix& u) {
  const Complex x0 = a0;
  const Complex x1 = a1;
  a0 = u(0, 0) * x0 + u(0, 1) * x1;
  a1 = u(1, 0) * x0 + u(1, 1) * x1;
}

template <int D>
inline void update_group(Complex* amps, const Index (&idx)[D], const GateMatrix& u) {
  Complex x[D];
  for (int r = 0; r < D; ++r) x[r] = amps[idx[r]];
  for (int r = 0; r < D; ++r) {
    Complex sum = u(r, 0) * x[0];
    for (int c = 1; c < D; ++c) sum += u(r, c) * x[c];
    amps[idx[r]] = sum;
  }
}

inline int log2_size(std::size_t n) { return std::countr_zero(n); }

// Indices of a 4-group in |q0,q1> order given the base index with both bits clear.
inline void group4(Index base, int q0, int q1, Index (&idx)[4]) {
  const Index m0 = bits::pow2(q0);
  const Index m1 = bits::pow2(q1);
  idx[0] = base;
  idx[1] = base | m1;
  idx[2] = base | m0;
  idx[3] = base | m0 | m1;
}

inline void group8(Index base, int q0, int q1, int q2, Index (&idx)[8]) {
  const Index m[3] = {bits::pow2(q0), bits::pow2(q1), bits::pow2(q2)};
  for (int r = 0; r < 8; ++r) {
    Index i = base;
    if (r & 4) i |= m[0];
    if (r & 2) i |= m[1];
    if (r & 1) i |= m[2];
    idx[r] = i;
  }
}

template <typename F>
double chunked_sum_serial(Index n, F&& f) {
  const Index chunks = (n + kReductionChunk - 1) / kReductionChunk;
  double total = 0.0;
  for (Index c = 0; c < chunks; ++c) {
    const Index end = std::min(n, (c + 1) * kReductionChunk);
    double partial = 0.0;
    for (Index i = c * kReductionChunk; i < end; ++i) partial += f(i);
    total += partial;
  }
  return total;
}

template <typename F>
double chunked_sum_omp(Index n, F&& f) {
  const Index chunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partials(chunks, 0.0);
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index c = 0; c < chunks; ++c) {
    const Index end = std::min(n, (c + 1) * kReductionChunk);
    double partial = 0.0;
    for (Index i = c * kReductionChunk; i < end; ++i) partial += f(i);
    partials[c] = partial;
  }
  double total = 0.0;
  for (double p : partials) total += p;
  return total;
}

// Accumulates pair moments of the pairs with pair index in [begin, end).
inline PairMoments pair_chunk(const Complex* a, int j, Index begin, Index end) {
  PairMoments m;
  const Index bit = bits::pow2(j);
  double re = 0.0;
  double im = 0.0;
  for (Index g = begin; g < end; ++g) {
    const Index i0 = bits::insert_zero(g, j);
    const Complex a0 = a[i0];
    const Complex a1 = a[i0 | bit];
    m.p0 += std::norm(a0);
    m.p1 += std::norm(a1);
    re += a0.real() * a1.real() + a0.imag() * a1.imag();
    im += a0.real() * a1.imag() - a0.imag() * a1.real();
  }
  m.overlap = Complex(re, im);
  return m;
}

inline void accumulate(PairMoments& total, const PairMoments& part) {
  total.p0 += part.p0;
  total.p1 += part.p1;
  total.overlap += part.overlap;
}

}  // namespace

int thread_budget() { return t_budget > 0 ? t_budget : omp_get_max_threads(); }
void set_thread_budget(int threads) { t_budget = threads; }

// ---------------------------------------------------------------------------
// Serial reference.

namespace serial {

void apply_single(std::span<Complex> amps, int j, const GateMatrix& u) {
  for (Index i = 0; i < amps.size(); ++i) {
    if (bits::test(i, j)) continue;
    update_pair(amps[i], amps[bits::flip(i, j)], u);
  }
}

void apply_diagonal(std::span<Complex> amps, int j, Complex d0, Complex d1) {
  for (Index i = 0; i < amps.size(); ++i) amps[i] = (bits::test(i, j) ? d1 : d0) * amps[i];
}

void apply_two(std::span<Complex> amps, int q0, int q1, const GateMatrix& u) {
  for (Index i = 0; i < amps.size(); ++i) {
    if (bits::test(i, q0) || bits::test(i, q1)) continue;
    Index idx[4];
    group4(i, q0, q1, idx);
    update_group<4>(amps.data(), idx, u);
  }
}

void apply_controlled_phase(std::span<Complex> amps, int q0, int q1, Complex phase) {
  for (Index i = 0; i < amps.size(); ++i) {
    if (bits::test(i, q0) && bits::test(i, q1)) amps[i] = phase * amps[i];
  }
}

void apply_cnot(std::span<Complex> amps, int control, int target) {
  for (Index i = 0; i < amps.size(); ++i) {
    if (bits::test(i, control) && !bits::test(i, target)) {
      std::swap(amps[i], amps[bits::flip(i, target)]);
    }
  }
}

void apply_three(std::span<Complex> amps, int q0, int q1, int q2, const GateMatrix& u) {
  for (Index i = 0; i < amps.size(); ++i) {
    if (bits::test(i, q0) || bits::test(i, q1) || bits::test(i, q2)) continue;
    Index idx[8];
    group8(i, q0, q1, q2, idx);
    update_group<8>(amps.data(), idx, u);
  }
}

void apply_toffoli(std::span<Complex> amps, int c0, int c1, int target) {
  for (Index i = 0; i < amps.size(); ++i) {
    if (bits::test(i, c0) && bits::test(i, c1) && !bits::test(i, target)) {
      std::swap(amps[i], amps[bits::flip(i, target)]);
    }
  }
}

void swap_bits(std::span<Complex> amps, int a, int b) {
  for (Index i = 0; i < amps.size(); ++i) {
    if (bits::test(i, a) && !bits::test(i, b)) std::swap(amps[i], amps[bits::swap_bits(i, a, b)]);
  }
}

double norm_squared(std::span<const Complex> amps) {
  return chunked_sum_serial(amps.size(), [&](Index i) { return std::norm(amps[i]); });
}

double probability_one(std::span<const Complex> amps, int j) {
  return chunked_sum_serial(amps.size(),
                            [&](Index i) { return bits::test(i, j) ? std::norm(amps[i]) : 0.0; });
}

PairMoments pair_moments(std::span<const Complex> amps, int j) {
  const Index pairs = amps.size() / 2;
  PairMoments total;
  for (Index c = 0; c * kReductionChunk < pairs; ++c) {
    accumulate(total, pair_chunk(amps.data(), j, c * kReductionChunk,
                                 std::min(pairs, (c + 1) * kReductionChunk)));
  }
  return total;
}

void project(std::span<Complex> amps, int j, int keep_bit, double factor) {
  for (Index i = 0; i < amps.size(); ++i) {
    amps[i] = (static_cast<int>(bits::test(i, j)) == keep_bit) ? amps[i] * factor : Complex(0.0);
  }
}

void scale(std::span<Complex> amps, double factor) {
  for (auto& a : amps) a *= factor;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP kernels.

namespace omp {

void apply_single(std::span<Complex> amps, int j, const GateMatrix& u) {
  // Outer loop over the bits above j, inner loop over the bits below j. Both
  // loops are distributed when the outer trip count is at least the inner
  // one, otherwise only the inner loop is.
  Complex* a = amps.data();
  const Index n = amps.size();
  const Index nstates = n / 2;
  const Index i = bits::pow2(j);
  const int threads = thread_budget();
  if (nstates / (i + i) >= i) {
#pragma omp parallel for collapse(2) schedule(static) num_threads(threads)
    for (Index k = 0; k < n; k += i + i) {
      for (Index l = 0; l < i; ++l) {
        const Index i0 = l | k;
        update_pair(a[i0], a[i0 | i], u);
      }
    }
  } else {
    for (Index k = 0; k < n; k += i + i) {
#pragma omp parallel for schedule(static) num_threads(threads)
      for (Index l = 0; l < i; ++l) {
        const Index i0 = l | k;
        update_pair(a[i0], a[i0 | i], u);
      }
    }
  }
}

void apply_diagonal(std::span<Complex> amps, int j, Complex d0, Complex d1) {
  Complex* a = amps.data();
  const Index n = amps.size();
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index i = 0; i < n; ++i) a[i] = (bits::test(i, j) ? d1 : d0) * a[i];
}

void apply_two(std::span<Complex> amps, int q0, int q1, const GateMatrix& u) {
  Complex* a = amps.data();
  const Index groups = amps.size() / 4;
  const auto sorted = bits::sorted(std::array<int, 2>{q0, q1});
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index g = 0; g < groups; ++g) {
    Index idx[4];
    group4(bits::insert_zeros(g, sorted), q0, q1, idx);
    update_group<4>(a, idx, u);
  }
}

void apply_controlled_phase(std::span<Complex> amps, int q0, int q1, Complex phase) {
  Complex* a = amps.data();
  const Index groups = amps.size() / 4;
  const auto sorted = bits::sorted(std::array<int, 2>{q0, q1});
  const Index mask = bits::pow2(q0) | bits::pow2(q1);
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index g = 0; g < groups; ++g) {
    const Index i = bits::insert_zeros(g, sorted) | mask;
    a[i] = phase * a[i];
  }
}

void apply_cnot(std::span<Complex> amps, int control, int target) {
  Complex* a = amps.data();
  const Index groups = amps.size() / 4;
  const auto sorted = bits::sorted(std::array<int, 2>{control, target});
  const Index c = bits::pow2(control);
  const Index t = bits::pow2(target);
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index g = 0; g < groups; ++g) {
    const Index i = bits::insert_zeros(g, sorted) | c;
    std::swap(a[i], a[i | t]);
  }
}

void apply_three(std::span<Complex> amps, int q0, int q1, int q2, const GateMatrix& u) {
  Complex* a = amps.data();
  const Index groups = amps.size() / 8;
  const auto sorted = bits::sorted(std::array<int, 3>{q0, q1, q2});
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index g = 0; g < groups; ++g) {
    Index idx[8];
    group8(bits::insert_zeros(g, sorted), q0, q1, q2, idx);
    update_group<8>(a, idx, u);
  }
}

void apply_toffoli(std::span<Complex> amps, int c0, int c1, int target) {
  Complex* a = amps.data();
  const Index groups = amps.size() / 8;
  const auto sorted = bits::sorted(std::array<int, 3>{c0, c1, target});
  const Index c = bits::pow2(c0) | bits::pow2(c1);
  const Index t = bits::pow2(target);
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index g = 0; g < groups; ++g) {
    const Index i = bits::insert_zeros(g, sorted) | c;
    std::swap(a[i], a[i | t]);
  }
}

void swap_bits(std::span<Complex> amps, int a, int b) {
  if (a == b) return;
  Complex* p = amps.data();
  const Index groups = amps.size() / 4;
  const auto sorted = bits::sorted(std::array<int, 2>{a, b});
  const Index ma = bits::pow2(a);
  const Index mb = bits::pow2(b);
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index g = 0; g < groups; ++g) {
    const Index base = bits::insert_zeros(g, sorted);
    std::swap(p[base | ma], p[base | mb]);
  }
}

double norm_squared(std::span<const Complex> amps) {
  return chunked_sum_omp(amps.size(), [&](Index i) { return std::norm(amps[i]); });
}

double probability_one(std::span<const Complex> amps, int j) {
  return chunked_sum_omp(amps.size(),
                         [&](Index i) { return bits::test(i, j) ? std::norm(amps[i]) : 0.0; });
}

PairMoments pair_moments(std::span<const Complex> amps, int j) {
  const Index pairs = amps.size() / 2;
  const Index chunks = (pairs + kReductionChunk - 1) / kReductionChunk;
  std::vector<PairMoments> partials(chunks);
  const Complex* a = amps.data();
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index c = 0; c < chunks; ++c) {
    partials[c] = pair_chunk(a, j, c * kReductionChunk, std::min(pairs, (c + 1) * kReductionChunk));
  }
  PairMoments total;
  for (const auto& p : partials) accumulate(total, p);
  return total;
}

void project(std::span<Complex> amps, int j, int keep_bit, double factor) {
  Complex* a = amps.data();
  const Index n = amps.size();
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index i = 0; i < n; ++i) {
    a[i] = (static_cast<int>(bits::test(i, j)) == keep_bit) ? a[i] * factor : Complex(0.0);
  }
}

void scale(std::span<Complex> amps, double factor) {
  Complex* a = amps.data();
  const Index n = amps.size();
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (Index i = 0; i < n; ++i) a[i] *= factor;
}

}  // namespace omp

}  // namespace qcsim::kernels
