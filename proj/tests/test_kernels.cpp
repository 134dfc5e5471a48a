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

#include <cstring>
#include <random>

#include "oracle.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {
namespace {

namespace ks = kernels::serial;
namespace ko = kernels::omp;

bool bit_identical(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

GateMatrix random_unitary2(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  Instruction u3;
  u3.opcode = Opcode::kU3;
  u3.qubits = {0};
  u3.angles = {ang(gen), ang(gen), ang(gen)};
  return gate_matrix(u3);
}

// Big enough that the omp kernels split the work across chunks.
constexpr int kBigN = 16;

TEST(Kernels, SerialAndParallelAreBitIdentical) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 4; ++trial) {
    const auto psi = oracle::random_state(kBigN, gen);
    const GateMatrix u = random_unitary2(gen);
    const GateMatrix u4 = kron(random_unitary2(gen), random_unitary2(gen));
    const GateMatrix u8 = kron(u4, random_unitary2(gen));
    const int j = static_cast<int>(gen() % kBigN);
    const int k = (j + 1 + static_cast<int>(gen() % (kBigN - 1))) % kBigN;
    int l = static_cast<int>(gen() % kBigN);
    while (l == j || l == k) l = static_cast<int>(gen() % kBigN);

    auto run_both = [&](auto&& op) {
      auto a = psi;
      auto b = psi;
      op(a, true);
      op(b, false);
      EXPECT_TRUE(bit_identical(a, b));
    };
    run_both([&](auto& v, bool s) { s ? ks::apply_single(v, j, u) : ko::apply_single(v, j, u); });
    run_both([&](auto& v, bool s) {
      s ? ks::apply_diagonal(v, j, {0.6, 0.8}, {0.0, -1.0}) : ko::apply_diagonal(v, j, {0.6, 0.8}, {0.0, -1.0});
    });
    run_both([&](auto& v, bool s) { s ? ks::apply_two(v, j, k, u4) : ko::apply_two(v, j, k, u4); });
    run_both([&](auto& v, bool s) {
      s ? ks::apply_controlled_phase(v, j, k, {0.0, 1.0}) : ko::apply_controlled_phase(v, j, k, {0.0, 1.0});
    });
    run_both([&](auto& v, bool s) { s ? ks::apply_cnot(v, j, k) : ko::apply_cnot(v, j, k); });
    run_both([&](auto& v, bool s) { s ? ks::apply_three(v, j, k, l, u8) : ko::apply_three(v, j, k, l, u8); });
    run_both([&](auto& v, bool s) { s ? ks::apply_toffoli(v, j, k, l) : ko::apply_toffoli(v, j, k, l); });
    run_both([&](auto& v, bool s) { s ? ks::swap_bits(v, j, k) : ko::swap_bits(v, j, k); });
    run_both([&](auto& v, bool s) { s ? ks::project(v, j, 1, 1.25) : ko::project(v, j, 1, 1.25); });
    run_both([&](auto& v, bool s) { s ? ks::scale(v, 0.5) : ko::scale(v, 0.5); });

    // Reductions use a fixed chunking, so they agree exactly too.
    EXPECT_EQ(ks::norm_squared(psi), ko::norm_squared(psi));
    EXPECT_EQ(ks::probability_one(psi, j), ko::probability_one(psi, j));
    const auto ms = ks::pair_moments(psi, j);
    const auto mo = ko::pair_moments(psi, j);
    EXPECT_EQ(ms.p0, mo.p0);
    EXPECT_EQ(ms.p1, mo.p1);
    EXPECT_EQ(ms.overlap, mo.overlap);
  }
}

TEST(Kernels, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 gen(12);
  const auto psi = oracle::random_state(kBigN, gen);
  const GateMatrix u = random_unitary2(gen);
  std::vector<std::vector<Complex>> results;
  std::vector<double> norms;
  for (int threads : {1, 2, 3}) {
    kernels::ScopedThreadBudget budget(threads);
    auto v = psi;
    ko::apply_single(v, 7, u);
    results.push_back(v);
    norms.push_back(ko::norm_squared(v));
  }
  EXPECT_TRUE(bit_identical(results[0], results[1]));
  EXPECT_TRUE(bit_identical(results[0], results[2]));
  EXPECT_EQ(norms[0], norms[1]);
  EXPECT_EQ(norms[0], norms[2]);
}

// Every kernel against the dense Kronecker-style oracle on small registers.
TEST(Kernels, MatchDenseOracle) {
  std::mt19937_64 gen(13);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto psi = oracle::random_state(n, gen);
      std::vector<int> pos;
      while (pos.size() < 3) {
        const int p = static_cast<int>(gen() % n);
        if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
      }
      const GateMatrix u = random_unitary2(gen);
      const GateMatrix u4 = kron(random_unitary2(gen), random_unitary2(gen));
      const GateMatrix u8 = kron(u4, random_unitary2(gen));

      auto v = psi;
      ko::apply_single(v, pos[0], u);
      EXPECT_LE(oracle::max_abs_diff(v, oracle::apply_dense(psi, u, {pos[0]})), 1e-14);

      v = psi;
      ko::apply_two(v, pos[0], pos[1], u4);
      EXPECT_LE(oracle::max_abs_diff(v, oracle::apply_dense(psi, u4, {pos[0], pos[1]})), 1e-14);

      v = psi;
      ko::apply_three(v, pos[0], pos[1], pos[2], u8);
      EXPECT_LE(oracle::max_abs_diff(v, oracle::apply_dense(psi, u8, pos)), 1e-14);

      Instruction cnot;
      cnot.opcode = Opcode::kCnot;
      cnot.qubits = {pos[0], pos[1]};
      v = psi;
      ko::apply_cnot(v, pos[0], pos[1]);
      EXPECT_EQ(oracle::max_abs_diff(v, oracle::apply_dense(psi, gate_matrix(cnot), cnot.qubits)), 0.0);

      Instruction tof;
      tof.opcode = Opcode::kToffoli;
      tof.qubits = pos;
      v = psi;
      ko::apply_toffoli(v, pos[0], pos[1], pos[2]);
      EXPECT_EQ(oracle::max_abs_diff(v, oracle::apply_dense(psi, gate_matrix(tof), pos)), 0.0);

      Instruction cp;
      cp.opcode = Opcode::kCPhase;
      cp.qubits = {pos[0], pos[1]};
      cp.ints = {3};
      v = psi;
      ko::apply_controlled_phase(v, pos[0], pos[1], phase_from_exponent(3, false));
      EXPECT_LE(oracle::max_abs_diff(v, oracle::apply_dense(psi, gate_matrix(cp), cp.qubits)), 1e-15);

      // apply_gate_to dispatch, through each fast path.
      for (const Instruction& instr : {cnot, tof, cp}) {
        v = psi;
        apply_gate_to(v, instr, instr.qubits);
        EXPECT_LE(oracle::max_abs_diff(v, oracle::apply_dense(psi, gate_matrix(instr), instr.qubits)), 1e-15);
      }
    }
  }
}

TEST(Kernels, SwapBitsRelabelsIndices) {
  std::mt19937_64 gen(14);
  const auto psi = oracle::random_state(5, gen);
  auto v = psi;
  ko::swap_bits(v, 1, 4);
  for (Index i = 0; i < psi.size(); ++i) {
    const Index b1 = (i >> 1) & 1, b4 = (i >> 4) & 1;
    const Index k = (i & ~Index{0x12}) | (b1 << 4) | (b4 << 1);
    EXPECT_EQ(v[k], psi[i]);
  }
}

TEST(Kernels, MomentsGiveExpectations) {
  std::mt19937_64 gen(15);
  const auto psi = oracle::random_state(6, gen);
  for (int j = 0; j < 6; ++j) {
    const auto e = expectation_from_moments(ko::pair_moments(psi, j));
    const auto ref = oracle::expectation(psi, j);
    EXPECT_NEAR(e.qx, ref[0], 1e-14);
    EXPECT_NEAR(e.qy, ref[1], 1e-14);
    EXPECT_NEAR(e.qz, ref[2], 1e-14);
    EXPECT_NEAR(ko::probability_one(psi, j), ref[2], 1e-14);
  }
}

TEST(Kernels, ProjectKeepsOneBranch) {
  std::mt19937_64 gen(16);
  const auto psi = oracle::random_state(5, gen);
  auto v = psi;
  ko::project(v, 2, 0, 2.0);
  for (Index i = 0; i < v.size(); ++i) {
    EXPECT_EQ(v[i], (i & 4) ? Complex{} : 2.0 * psi[i]);
  }
}

}  // namespace
}  // namespace qcsim
