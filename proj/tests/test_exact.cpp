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

#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "qcsim/generators.hpp"
#include "qcsim/shor.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {
namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::filesystem::path(QCSIM_CORPUS_DIR) / name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Complex> final_state(const Circuit& c) {
  ExactBackend b(c.n_qubits);
  for (const auto& instr : c.instructions) {
    if (is_gate(instr.opcode)) b.apply_gate(instr);
  }
  const auto amps = b.state().amplitudes();
  return {amps.begin(), amps.end()};
}

TEST(Exact, HadamardWall) {
  const RunResult r = run_exact(gen_hadamard_wall(4));
  ASSERT_EQ(r.measurements.size(), 1u);
  for (const auto& q : r.measurements[0].record.qubits) {
    EXPECT_NEAR(q.qx, 0.0, 1e-15);
    EXPECT_NEAR(q.qy, 0.5, 1e-15);
    EXPECT_NEAR(q.qz, 0.5, 1e-15);
    EXPECT_EQ(format_triplet(q), "0.000 0.500 0.500");
  }
}

TEST(Exact, GhzAmplitudes) {
  const auto psi = final_state(gen_ghz_chain(3));
  const double s = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < 8; ++i) {
    const double expected = (i == 0 || i == 7) ? s : 0.0;
    EXPECT_NEAR(std::abs(psi[i] - expected), 0.0, 1e-15) << i;
  }
  const RunResult r = run_exact(gen_ghz_chain(4));
  for (const auto& q : r.measurements[0].record.qubits) EXPECT_EQ(format_triplet(q), "0.500 0.500 0.500");
}

TEST(Exact, RandomCircuitsMatchDenseOracle) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    oracle::RandomCircuitSpec spec;
    spec.n_qubits = 2 + trial % 5;
    spec.gates = 30;
    spec.toffoli = spec.n_qubits >= 3;
    const Circuit c = oracle::random_circuit(spec, gen);
    const auto ref = oracle::simulate(c);
    EXPECT_LE(oracle::max_abs_diff(final_state(c), ref), 1e-13) << pretty_print(c);
    const RunResult r = run_exact(c);
    for (int j = 0; j < c.n_qubits; ++j) {
      const auto e = oracle::expectation(ref, j);
      const auto& got = r.measurements[0].record.qubits[j];
      EXPECT_NEAR(got.qx, e[0], 1e-13);
      EXPECT_NEAR(got.qy, e[1], 1e-13);
      EXPECT_NEAR(got.qz, e[2], 1e-13);
    }
  }
}

TEST(Exact, QftOfZeroIsUniform) {
  Circuit c;
  c.n_qubits = 2;
  c.instructions = gen_qft({0, 1}, false);
  const auto psi = final_state(c);
  for (const auto& a : psi) EXPECT_NEAR(std::abs(a - 0.5), 0.0, 1e-15);
}

// Column x of the QFT is 2^{-n/2} sum_k e^{2 pi i x k / 2^n} |k>.
TEST(Exact, QftMatchesDiscreteFourierMatrix) {
  const int n = 4;
  const Index dim = Index{1} << n;
  for (Index x = 0; x < dim; ++x) {
    Circuit c;
    c.n_qubits = n;
    for (int j = 0; j < n; ++j) {
      if ((x >> j) & 1) {
        Instruction flip;
        flip.opcode = Opcode::kX;
        flip.qubits = {j};
        c.instructions.push_back(flip);
      }
    }
    const auto qft = gen_qft({0, 1, 2, 3}, false);
    c.instructions.insert(c.instructions.end(), qft.begin(), qft.end());
    const auto psi = final_state(c);
    for (Index k = 0; k < dim; ++k) {
      const Complex expected =
          std::polar(0.25, 2.0 * std::numbers::pi * static_cast<double>(x * k) / static_cast<double>(dim));
      EXPECT_LE(std::abs(psi[k] - expected), 1e-14) << "x=" << x << " k=" << k;
    }
  }
}

TEST(Exact, InverseQftUndoesQft) {
  std::mt19937_64 gen(22);
  const std::vector<int> targets{2, 0, 1};
  for (int trial = 0; trial < 5; ++trial) {
    const auto psi = oracle::random_state(3, gen);
    StateVector s(3);
    std::copy(psi.begin(), psi.end(), s.amplitudes().begin());
    for (const auto& i : gen_qft(targets, false)) s.apply(i);
    for (const auto& i : gen_qft(targets, true)) s.apply(i);
    const auto amps = s.amplitudes();
    EXPECT_LE(oracle::max_abs_diff({amps.begin(), amps.end()}, psi), 1e-12);
  }
}

TEST(Exact, AdderSums) {
  for (auto [k, a, b] : std::vector<std::tuple<int, std::uint64_t, std::uint64_t>>{
           {3, 1, 1}, {3, 5, 6}, {4, 9, 6}, {4, 15, 15}, {5, 17, 14}, {2, 0, 3}}) {
    const RunResult r = run_exact(gen_adder(k, a, b));
    const std::uint64_t sum = (a + b) % (std::uint64_t{1} << k);
    const auto& q = r.measurements.back().record.qubits;
    for (int j = 0; j < k; ++j) {
      EXPECT_NEAR(q[j].qz, static_cast<double>((sum >> j) & 1), 1e-10) << a << "+" << b << " bit " << j;
      EXPECT_NEAR(q[k + j].qz, static_cast<double>((b >> j) & 1), 1e-10);
    }
  }
}

TEST(Exact, BitAssignmentIsTransparent) {
  const Circuit plain = gen_adder(3, 5, 6);
  const Circuit renumbered = gen_adder(3, 5, 6, 0, BitPermutation({2, 3, 1, 0, 5, 4}));
  const auto a = run_exact(plain).measurements.back().record.qubits;
  const auto b = run_exact(renumbered).measurements.back().record.qubits;
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a[j].qz, b[j].qz, 1e-12);
}

TEST(Exact, MeasurementCollapsesAndIsSeeded) {
  const Circuit c = parse_program("QUBITS 3\nH 0\nCNOT 0 1\nM 0\nBEGIN MEASUREMENT\n");
  std::map<int, int> outcomes;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RunOptions opt;
    opt.seed = seed;
    const RunResult r = run_exact(c, opt);
    ASSERT_EQ(r.projections.size(), 1u);
    const int bit = r.projections[0].outcome;
    ++outcomes[bit];
    const auto& q = r.measurements[0].record.qubits;
    EXPECT_NEAR(q[0].qz, bit, 1e-15);
    EXPECT_NEAR(q[1].qz, bit, 1e-15);
    EXPECT_EQ(run_exact(c, opt).projections[0].outcome, bit);
  }
  // 200 fair coin flips: 5 sigma is about 35.
  EXPECT_NEAR(outcomes[0], 100, 36);
}

TEST(Exact, ClearAndSet) {
  const RunResult r = run_exact(parse_program("QUBITS 2\nH 0\nCLEAR 0\nX 1\nSET 1\nBEGIN MEASUREMENT\n"));
  const auto& q = r.measurements[0].record.qubits;
  EXPECT_NEAR(q[0].qz, 0.0, 1e-15);
  EXPECT_NEAR(q[1].qz, 1.0, 1e-15);
  EXPECT_NEAR(q[0].qx, 0.5, 1e-15);

  try {
    run_exact(parse_program("QUBITS 2\nCLEAR 0\nSET 1\n"));
    FAIL() << "expected ExecutionError";
  } catch (const ExecutionError& e) {
    EXPECT_NE(std::string(e.what()).find("amplitude zero"), std::string::npos);
  }
}

TEST(Exact, EventsFollowDistributionAndSeed) {
  const Circuit c = parse_program("QUBITS 3\nH 0\nH 2\nGENERATE EVENTS 4000 77\n");
  const RunResult a = run_exact(c);
  const RunResult b = run_exact(c);
  ASSERT_TRUE(a.events.has_value());
  EXPECT_EQ(a.events->events, b.events->events);
  EXPECT_EQ(a.events->seed, 77u);
  EXPECT_TRUE(a.exited);
  std::map<Index, int> counts;
  for (Index e : a.events->events) ++counts[e];
  ASSERT_EQ(counts.size(), 4u);
  for (Index s : {0u, 1u, 4u, 5u}) EXPECT_NEAR(counts[s], 1000, 5 * std::sqrt(1000 * 0.75));
  EXPECT_EQ(format_bitstring(4, 3), "100");
}

TEST(Exact, ExitStopsExecution) {
  const RunResult r = run_exact(parse_program("QUBITS 2\nX 0\nEXIT\nX 1\n"));
  EXPECT_TRUE(r.exited);
  ASSERT_EQ(r.measurements.size(), 1u);
  EXPECT_TRUE(r.measurements[0].at_exit);
  EXPECT_NEAR(r.measurements[0].record.qubits[0].qz, 1.0, 1e-15);
  EXPECT_NEAR(r.measurements[0].record.qubits[1].qz, 0.0, 1e-15);
}

TEST(Exact, ShorboxPreparesModularExponentiation) {
  const ShorParams p{3, 15, 7};
  StateVector s(8);
  s.shorbox(p);
  std::vector<Complex> expected(256);
  std::uint64_t f = 1;
  for (std::uint64_t x = 0; x < 8; ++x) {
    expected[x + (f << 3)] = 1.0 / std::sqrt(8.0);
    f = f * 7 % 15;
  }
  const auto amps = s.amplitudes();
  EXPECT_LE(oracle::max_abs_diff({amps.begin(), amps.end()}, expected), 1e-15);
  EXPECT_THROW(s.shorbox(p), ExecutionError);  // no longer |0...0>
  StateVector small(6);
  EXPECT_THROW(small.shorbox(p), ExecutionError);  // f-register too small for 15
}

TEST(Exact, NoiseIsSeededAndCounted) {
  const Circuit always_x = parse_program("QUBITS 2\nDEPOLARIZING CHANNEL P_X = 1 , SEED = 5\nI 0\nBEGIN MEASUREMENT\n");
  const RunResult r = run_exact(always_x);
  // One gate, an X on every qubit afterwards.
  for (const auto& q : r.measurements[0].record.qubits) EXPECT_NEAR(q.qz, 1.0, 1e-15);
  const Circuit some = parse_program(
      "QUBITS 4\nDEPOLARIZING CHANNEL P_X = 0.1 , P_Y = 0.1 , P_Z = 0.1 , SEED = 9\nH 0\nH 1\nH 2\nH 3\nBEGIN "
      "MEASUREMENT\n");
  EXPECT_EQ(run_exact(some).diagnostics["noise_events"], run_exact(some).diagnostics["noise_events"]);
}

TEST(Exact, ErrorCorrectionCorpus) {
  const auto clean = run_exact(parse_program(slurp("ec_no_error.qc")));
  const auto single = run_exact(parse_program(slurp("ec_single_error.qc")));
  const auto twice = run_exact(parse_program(slurp("ec_double_error.qc")));
  ASSERT_EQ(clean.measurements.size(), 2u);
  ASSERT_EQ(single.measurements.size(), 2u);
  double worst_single = 0.0;
  double worst_double = 0.0;
  for (int j = 0; j < 3; ++j) {
    const auto& a = clean.measurements[1].record.qubits[j];
    const auto& b = single.measurements[1].record.qubits[j];
    const auto& c = twice.measurements[1].record.qubits[j];
    worst_single = std::max({worst_single, std::abs(a.qx - b.qx), std::abs(a.qy - b.qy), std::abs(a.qz - b.qz)});
    worst_double = std::max({worst_double, std::abs(a.qx - c.qx), std::abs(a.qy - c.qy), std::abs(a.qz - c.qz)});
  }
  EXPECT_LE(worst_single, 1e-10);
  EXPECT_GT(worst_double, 0.1);
  ASSERT_TRUE(single.events.has_value());
  EXPECT_EQ(single.events->events.size(), 8192u);
}

TEST(Exact, AllocationFailureIsAResourceError) {
  try {
    StateVector s(62);
    FAIL() << "allocated 2^62 amplitudes";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("bytes"), std::string::npos);
  }
}

}  // namespace
}  // namespace qcsim
