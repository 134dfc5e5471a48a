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
#include <span>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/gates.hpp"
#include "qcsim/interpreter.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/run_result.hpp"

namespace qcsim {

/// Applies a gate instruction to an amplitude array. `positions[k]` is the
/// array bit of operand k (the logical qubit itself on a single rank).
void apply_gate_to(std::span<Complex> amps, const Instruction& instr, std::span<const int> positions);

/// Expectation triplet from the pair moments of one qubit.
QubitExpectation expectation_from_moments(const kernels::PairMoments& m);

/// Same, for a state whose norm may have drifted from 1 (lossy storage):
/// <psi|O|psi> / <psi|psi>.
QubitExpectation normalized_expectation(const kernels::PairMoments& m);

/// Block size used by event sampling; min(4096, size).
Index sampling_block(Index size);

/// Probability mass of each sampling block of an amplitude array.
std::vector<double> block_masses(std::span<const Complex> amps, Index block);

/// Offset within [0, block) at which the running |a|^2 first exceeds
/// `residual`; falls back to the last nonzero entry.
Index scan_block(std::span<const Complex> block_amps, double residual);

/// Full-precision state: 2^N complex<double> amplitudes, 16 bytes each.
class StateVector {
 public:
  /// |0...0>. Throws ResourceError naming the byte count if allocation fails.
  explicit StateVector(int n_qubits);

  static std::uint64_t bytes_required(int n_qubits) { return std::uint64_t{16} << n_qubits; }

  int n_qubits() const { return n_; }
  Index size() const { return amps_.size(); }
  std::span<Complex> amplitudes() { return amps_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](Index i) const { return amps_[i]; }

  void apply(const Instruction& instr);
  void apply_single(int j, const GateMatrix& u) { kernels::omp::apply_single(amps_, j, u); }
  void apply_two(int q0, int q1, const GateMatrix& u) { kernels::omp::apply_two(amps_, q0, q1, u); }
  void apply_three(int q0, int q1, int q2, const GateMatrix& u) {
    kernels::omp::apply_three(amps_, q0, q1, q2, u);
  }

  double norm_squared() const { return kernels::omp::norm_squared(amps_); }
  QubitExpectation expectation(int qubit) const;
  MeasurementRecord expectations() const;

  /// Samples an outcome of qubit j, collapses and renormalizes.
  int project_measure(int j, Rng& rng);
  /// Projects qubit j onto |bit>; throws ExecutionError on zero amplitude.
  void clear_or_set(int j, int bit);

  std::vector<Index> generate_events(std::int64_t count, Rng& rng) const;

  /// Requires |0...0>; throws ExecutionError otherwise.
  void shorbox(const ShorParams& params);

  bool is_zero_state() const;

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// Backend adapter of StateVector for the interpreter.
class ExactBackend final : public Backend {
 public:
  explicit ExactBackend(int n_qubits) : state_(n_qubits) {}

  std::string_view name() const override { return "exact"; }
  int n_qubits() const override { return state_.n_qubits(); }
  void apply_gate(const Instruction& instr) override { state_.apply(instr); }
  MeasurementRecord expectations() override { return state_.expectations(); }
  std::pair<double, double> branch_weights(int qubit) override;
  void project(int qubit, int bit, double scale) override;
  std::vector<Index> sample(std::int64_t count, Rng& rng) override {
    return state_.generate_events(count, rng);
  }
  void shorbox(const ShorParams& params) override { state_.shorbox(params); }

  StateVector& state() { return state_; }
  const StateVector& state() const { return state_; }

 private:
  StateVector state_;
};

/// Parses nothing; runs an already validated circuit on the exact engine.
RunResult run_exact(const Circuit& circuit, const RunOptions& options = {});

}  // namespace qcsim
