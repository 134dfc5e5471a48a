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
#include <span>
#include <string_view>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/rng.hpp"
#include "qcsim/run_result.hpp"

namespace qcsim {

/// A state representation the interpreter can drive. Qubit arguments are
/// logical qubits; backends that relocate qubits keep their own mapping.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string_view name() const = 0;
  virtual int n_qubits() const = 0;

  /// Applies a unitary gate instruction (is_gate(opcode) holds).
  virtual void apply_gate(const Instruction& instr) = 0;

  /// Non-destructive expectation values of all qubits.
  virtual MeasurementRecord expectations() = 0;

  /// Unnormalized branch weights {p0, p1} of one qubit.
  virtual std::pair<double, double> branch_weights(int qubit) = 0;

  /// Keeps the branch with qubit == bit and multiplies it by `scale`.
  virtual void project(int qubit, int bit, double scale) = 0;

  /// Draws `count` basis states from |a(i)|^2 (logical qubit order).
  virtual std::vector<Index> sample(std::int64_t count, Rng& rng) = 0;

  /// Prepares 2^{-n_x/2} sum_x |x>|y^x mod G> from |0...0>.
  virtual void shorbox(const ShorParams& params) = 0;

  /// Initial logical-to-physical placement requested by BIT ASSIGNMENT.
  virtual void set_bit_assignment(const BitPermutation& /*assignment*/) {}

  virtual nlohmann::json diagnostics() const { return nlohmann::json::object(); }
};

struct RunOptions {
  /// Seed of the projective-measurement stream.
  std::uint64_t seed = 1;
  /// Replaces the operating-system seed when GENERATE EVENTS or the
  /// depolarizing channel ask for one (seed <= 0). Makes such runs
  /// reproducible.
  std::optional<std::uint64_t> entropy_override;
};

/// Squared norm below which CLEAR/SET treat the projected state as zero.
inline constexpr double kZeroProjection = 1e-14;

/// Executes the circuit instruction by instruction on `backend`.
RunResult run_circuit(const Circuit& circuit, Backend& backend, const RunOptions& options = {});

/// Inverse-CDF sampling over fixed-size amplitude blocks. `block_mass[b]` is
/// the probability mass of block b; `scan(b, residual)` returns the offset
/// inside block b at which the running mass first exceeds `residual`.
template <typename Scan>
std::vector<Index> sample_blocks(std::span<const double> block_mass, Index block_size,
                                 std::int64_t count, Rng& rng, Scan&& scan);

}  // namespace qcsim

#include "qcsim/interpreter_inl.hpp"
