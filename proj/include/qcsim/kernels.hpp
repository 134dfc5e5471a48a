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

#include <span>

#include "qcsim/gates.hpp"
#include "qcsim/types.hpp"

// In-place gate updates on a contiguous amplitude array. Bit positions refer
// to the array index (bit j of i is the state of the qubit stored at j).
//
// kernels::serial is the reference: one straight loop over all indices,
// obviously correct, never used on hot paths. kernels::omp is the tuned,
// OpenMP-parallel version. For every input both produce bit-identical output,
// since each amplitude group is updated with the same arithmetic and groups
// are disjoint.

namespace qcsim::kernels {

/// Threads used by the omp kernels on the calling thread (default: OpenMP's
/// max). Set per rank worker so that ranks do not oversubscribe.
int thread_budget();
void set_thread_budget(int threads);

class ScopedThreadBudget {
 public:
  explicit ScopedThreadBudget(int threads) : saved_(thread_budget()) { set_thread_budget(threads); }
  ~ScopedThreadBudget() { set_thread_budget(saved_); }
  ScopedThreadBudget(const ScopedThreadBudget&) = delete;
  ScopedThreadBudget& operator=(const ScopedThreadBudget&) = delete;

 private:
  int saved_;
};

/// Fixed chunk length of deterministic reductions; the partial sums are
/// combined in chunk order independent of the thread count.
inline constexpr Index kReductionChunk = Index{1} << 13;

/// Sums over the amplitude pairs (a0, a1) that differ only in bit j.
struct PairMoments {
  double p0 = 0.0;       // sum |a0|^2
  double p1 = 0.0;       // sum |a1|^2
  Complex overlap{};     // sum conj(a0) a1
};

#define QCSIM_KERNEL_DECLS                                                                   \
  void apply_single(std::span<Complex> amps, int j, const GateMatrix& u);                    \
  void apply_diagonal(std::span<Complex> amps, int j, Complex d0, Complex d1);               \
  void apply_two(std::span<Complex> amps, int q0, int q1, const GateMatrix& u);              \
  void apply_controlled_phase(std::span<Complex> amps, int q0, int q1, Complex phase);       \
  void apply_cnot(std::span<Complex> amps, int control, int target);                         \
  void apply_three(std::span<Complex> amps, int q0, int q1, int q2, const GateMatrix& u);    \
  void apply_toffoli(std::span<Complex> amps, int c0, int c1, int target);                   \
  void swap_bits(std::span<Complex> amps, int a, int b);                                     \
  double norm_squared(std::span<const Complex> amps);                                        \
  double probability_one(std::span<const Complex> amps, int j);                              \
  PairMoments pair_moments(std::span<const Complex> amps, int j);                            \
  void project(std::span<Complex> amps, int j, int keep_bit, double scale);                  \
  void scale(std::span<Complex> amps, double factor);

namespace serial {
QCSIM_KERNEL_DECLS
}  // namespace serial

namespace omp {
QCSIM_KERNEL_DECLS
}  // namespace omp

#undef QCSIM_KERNEL_DECLS

}  // namespace qcsim::kernels
