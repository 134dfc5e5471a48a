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

#include "qcsim/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>

#include "qcsim/bits.hpp"
#include "qcsim/shor.hpp"

namespace qcsim {

void apply_gate_to(std::span<Complex> amps, const Instruction& instr, std::span<const int> pos) {
  namespace k = kernels::omp;
  switch (instr.opcode) {
    case Opcode::kI:
      return;
    case Opcode::kCnot:
      return k::apply_cnot(amps, pos[0], pos[1]);
    case Opcode::kToffoli:
      return k::apply_toffoli(amps, pos[0], pos[1], pos[2]);
    case Opcode::kCPhase:
    case Opcode::kCPhaseDag:
      return k::apply_controlled_phase(amps, pos[0], pos[1],
                                       phase_from_exponent(instr.ints.at(0),
                                                           instr.opcode == Opcode::kCPhaseDag));
    default:
      break;
  }
  const GateMatrix u = gate_matrix(instr);
  switch (u.dim) {
    case 2:
      if (u.is_diagonal()) return k::apply_diagonal(amps, pos[0], u(0, 0), u(1, 1));
      return k::apply_single(amps, pos[0], u);
    case 4:
      return k::apply_two(amps, pos[0], pos[1], u);
    default:
      return k::apply_three(amps, pos[0], pos[1], pos[2], u);
  }
}

QubitExpectation expectation_from_moments(const kernels::PairMoments& m) {
  const double norm = m.p0 + m.p1;
  return {(norm - 2.0 * m.overlap.real()) / 2.0, (norm - 2.0 * m.overlap.imag()) / 2.0, m.p1};
}

QubitExpectation normalized_expectation(const kernels::PairMoments& m) {
  const double norm = m.p0 + m.p1;
  if (norm <= 0.0) return expectation_from_moments(m);
  return {0.5 - m.overlap.real() / norm, 0.5 - m.overlap.imag() / norm, m.p1 / norm};
}

Index sampling_block(Index size) { return std::min<Index>(4096, size); }

std::vector<double> block_masses(std::span<const Complex> amps, Index block) {
  const Index blocks = amps.size() / block;
  std::vector<double> mass(blocks);
  const Complex* a = amps.data();
#pragma omp parallel for schedule(static) num_threads(kernels::thread_budget())
  for (Index b = 0; b < blocks; ++b) {
    double s = 0.0;
    for (Index i = b * block; i < (b + 1) * block; ++i) s += std::norm(a[i]);
    mass[b] = s;
  }
  return mass;
}

Index scan_block(std::span<const Complex> block_amps, double residual) {
  double running = 0.0;
  Index last_nonzero = 0;
  for (Index i = 0; i < block_amps.size(); ++i) {
    const double p = std::norm(block_amps[i]);
    if (p == 0.0) continue;
    running += p;
    last_nonzero = i;
    if (running > residual) return i;
  }
  return last_nonzero;
}

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("qubit count out of range: " + std::to_string(n_qubits));
  }
  try {
    if (n_qubits > 58) throw std::bad_alloc();
    amps_.resize(std::size_t{1} << n_qubits);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate state of " + std::to_string(n_qubits) + " qubits (" +
                        std::to_string(n_qubits > 59 ? 0 : bytes_required(n_qubits)) +
                        " bytes required)");
  } catch (const std::length_error&) {
    throw ResourceError("cannot allocate state of " + std::to_string(n_qubits) + " qubits");
  }
  amps_[0] = 1.0;
}

void StateVector::apply(const Instruction& instr) { apply_gate_to(amps_, instr, instr.qubits); }

QubitExpectation StateVector::expectation(int qubit) const {
  return expectation_from_moments(kernels::omp::pair_moments(amps_, qubit));
}

MeasurementRecord StateVector::expectations() const {
  MeasurementRecord rec;
  rec.qubits.reserve(static_cast<std::size_t>(n_));
  for (int q = 0; q < n_; ++q) rec.qubits.push_back(expectation(q));
  return rec;
}

int StateVector::project_measure(int j, Rng& rng) {
  const auto m = kernels::omp::pair_moments(amps_, j);
  const int outcome = rng.uniform() * (m.p0 + m.p1) < m.p1 ? 1 : 0;
  kernels::omp::project(amps_, j, outcome, 1.0 / std::sqrt(outcome ? m.p1 : m.p0));
  return outcome;
}

void StateVector::clear_or_set(int j, int bit) {
  const auto m = kernels::omp::pair_moments(amps_, j);
  const double kept = bit ? m.p1 : m.p0;
  if (kept < kZeroProjection) {
    throw ExecutionError(std::string(bit ? "SET " : "CLEAR ") + std::to_string(j) +
                         ": projection results in a state with amplitude zero");
  }
  kernels::omp::project(amps_, j, bit, 1.0 / std::sqrt(kept));
}

std::vector<Index> StateVector::generate_events(std::int64_t count, Rng& rng) const {
  const Index block = sampling_block(size());
  const auto mass = block_masses(amps_, block);
  return sample_blocks(mass, block, count, rng, [&](std::size_t b, double residual) {
    return scan_block(std::span<const Complex>(amps_).subspan(b * block, block), residual);
  });
}

bool StateVector::is_zero_state() const {
  if (amps_[0] != Complex(1.0)) return false;
  return std::all_of(amps_.begin() + 1, amps_.end(), [](Complex a) { return a == Complex(0.0); });
}

void StateVector::shorbox(const ShorParams& params) {
  check_shorbox(n_, params);
  if (!is_zero_state()) throw ExecutionError("SHORBOX requires the state |0...0>");
  const double amp = std::pow(2.0, -0.5 * params.n_x);
  amps_[0] = 0.0;
  for_each_shor_state(params, [&](Index i) { amps_[i] = amp; });
}

std::pair<double, double> ExactBackend::branch_weights(int qubit) {
  const auto m = kernels::omp::pair_moments(state_.amplitudes(), qubit);
  return {m.p0, m.p1};
}

void ExactBackend::project(int qubit, int bit, double scale) {
  kernels::omp::project(state_.amplitudes(), qubit, bit, scale);
}

RunResult run_exact(const Circuit& circuit, const RunOptions& options) {
  ExactBackend backend(circuit.n_qubits);
  return run_circuit(circuit, backend, options);
}

}  // namespace qcsim
