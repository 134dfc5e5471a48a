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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qcsim/auxvar.hpp"
#include "qcsim/generators.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {
namespace {

std::vector<Index> all_states(int n) {
  std::vector<Index> out(Index{1} << n);
  for (Index i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

TEST(HsIdentity, RandomAnglesReconstructControlledPhase) {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> ang(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = ang(gen);
    const GateMatrix target = GateMatrix::diagonal({1.0, 1.0, 1.0, std::polar(1.0, a)});
    EXPECT_LE(GateMatrix::distance(hs_reconstruct(solve_hs(a)), target), 1e-12) << "a=" << a;
  }
}

TEST(HsIdentity, SolvesDefiningEquation) {
  for (double a : {0.0, 0.3, std::numbers::pi, -1.7, 2.0 * std::numbers::pi}) {
    const HsParameter hs = solve_hs(a);
    EXPECT_LE(std::abs(std::cos(2.0 * hs.x) - std::exp(Complex(0.0, a / 2.0))), 1e-12) << a;
  }
}

TEST(HsIdentity, FactorsAreDiagonal) {
  const HsParameter hs = solve_hs(0.9);
  for (int s : {1, -1}) {
    const GateMatrix f = hs_factor(hs, s);
    EXPECT_TRUE(f.is_diagonal());
    EXPECT_LE(std::abs(f(0, 0) * f(1, 1) - 1.0), 1e-12);
  }
}

TEST(Auxvar, GhzAmplitudes) {
  const Circuit c = gen_ghz_chain(5);
  const PathProgram program = compile_to_paths(c);
  EXPECT_EQ(program.p_count(), 4);
  const auto amps = amplitudes(program, all_states(5));
  const double s = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < 32; ++i) {
    EXPECT_LE(std::abs(amps[i] - Complex((i == 0 || i == 31) ? s : 0.0)), 1e-12) << i;
  }
}

TEST(Auxvar, RandomCircuitsMatchExact) {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    oracle::RandomCircuitSpec spec;
    spec.n_qubits = 2 + trial % 6;
    spec.gates = 24;
    spec.max_entangling = 10;
    const Circuit c = oracle::random_circuit(spec, gen);
    const auto ref = oracle::simulate(c);
    const auto got = amplitudes(compile_to_paths(c), all_states(c.n_qubits));
    EXPECT_LE(oracle::max_abs_diff(got, ref), 1e-9) << pretty_print(c);
  }
}

TEST(Auxvar, ResultIndependentOfThreads) {
  std::mt19937_64 gen(43);
  oracle::RandomCircuitSpec spec;
  spec.n_qubits = 6;
  spec.gates = 40;
  spec.max_entangling = 12;
  const PathProgram program = compile_to_paths(oracle::random_circuit(spec, gen));
  const auto basis = all_states(6);
  std::vector<Complex> first;
  for (int threads : {1, 2, 4}) {
    kernels::ScopedThreadBudget budget(threads);
    const auto amps = amplitudes(program, basis);
    if (first.empty()) {
      first = amps;
    } else {
      EXPECT_EQ(amps, first);
    }
  }
}

TEST(Auxvar, RejectsUnsupportedInstructions) {
  for (const char* line : {"TOFFOLI 0 1 2", "M 1", "CLEAR 0", "SET 0", "SHORBOX 1 3 2"}) {
    const Circuit c = parse_program(std::string("QUBITS 3\nH 0\n") + line + "\n");
    try {
      compile_to_paths(c);
      FAIL() << line;
    } catch (const UnsupportedInstruction& e) {
      EXPECT_EQ(e.line(), 3);
      EXPECT_EQ(e.mnemonic(), std::string(line).substr(0, e.mnemonic().size()));
      EXPECT_NE(std::string(e.what()).find(e.mnemonic()), std::string::npos);
    }
  }
  const Circuit noisy = parse_program("QUBITS 2\nDEPOLARIZING CHANNEL P_X = 0.1\nH 0\n");
  EXPECT_THROW(compile_to_paths(noisy), UnsupportedInstruction);
  // Events and EXIT end the program; what follows is never compiled.
  EXPECT_NO_THROW(compile_to_paths(parse_program("QUBITS 3\nH 0\nGENERATE EVENTS 3 1\nTOFFOLI 0 1 2\n")));
}

TEST(Auxvar, TooManyFactorsIsAResourceError) {
  Circuit c = gen_ghz_chain(2);
  c.instructions.pop_back();
  for (int k = 0; k < 63; ++k) c.instructions.push_back(c.instructions.back());
  EXPECT_THROW(compile_to_paths(c), ResourceError);
}

// Peak memory grows with N and M, never with 2^N.
TEST(Auxvar, MemoryIsLinearInQubitsAndQueries) {
  // H wall plus four CNOTs: P = 4 regardless of N.
  auto peak = [](int n, std::size_t queries) {
    Circuit c = gen_hadamard_wall(n);
    for (int k = 0; k < 4; ++k) {
      Instruction cnot;
      cnot.opcode = Opcode::kCnot;
      cnot.qubits = {k, k + 1};
      c.instructions.push_back(cnot);
    }
    const PathProgram program = compile_to_paths(c);
    std::vector<Index> basis(queries);
    for (std::size_t q = 0; q < queries; ++q) basis[q] = q;
    AuxvarStats stats;
    amplitudes(program, basis, &stats);
    return stats.peak_bytes;
  };
  const std::size_t p10 = peak(10, 4);
  const std::size_t p20 = peak(20, 4);
  const std::size_t p40 = peak(40, 4);
  EXPECT_GT(p10, 0u);
  // Doubling N at most doubles the footprint (plus constant slack).
  EXPECT_LE(p20, 2 * p10 + 256);
  EXPECT_LE(p40, 2 * p20 + 256);
  // Far below one state vector of the same width.
  EXPECT_LT(p20, StateVector::bytes_required(20) / 100);
  const std::size_t m8 = peak(10, 8);
  const std::size_t m16 = peak(10, 16);
  EXPECT_LE(m16 - m8, m8);
}

TEST(Auxvar, CostEstimate) {
  const PathProgram program = compile_to_paths(gen_ghz_chain(4));
  EXPECT_DOUBLE_EQ(cost_estimate(program, 3), 4.0 * 3.0 * 8.0);
}

TEST(Auxvar, BasisLabels) {
  EXPECT_EQ(parse_basis_label("0x1f", 6), 31u);
  EXPECT_EQ(parse_basis_label("100", 3), 4u);
  EXPECT_EQ(parse_basis_label("001", 3), 1u);
  EXPECT_THROW(parse_basis_label("0102", 4), ValidationError);
  EXPECT_EQ(parse_basis_label("10", 3), 2u);
  EXPECT_THROW(parse_basis_label("1010", 3), ValidationError);
  EXPECT_THROW(parse_basis_label("0x10", 4), ValidationError);
}

}  // namespace
}  // namespace qcsim
