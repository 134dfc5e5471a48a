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

#include <map>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qcsim/encoded_state.hpp"
#include "qcsim/generators.hpp"
#include "qcsim/state_vector.hpp"

namespace qcsim {
namespace {

constexpr double kPi = std::numbers::pi;

double roundtrip_bound(const Bounds& b) { return kPi / 256.0 + (b.r1 - b.r0) / 506.0 + 1e-12; }

TEST(Encoding, StorageIsTwoBytes) {
  EXPECT_EQ(sizeof(EncodedAmplitude), 2u);
  EncodedState s(10);
  EXPECT_EQ(s.storage_bytes(), 2u * 1024u);
  EXPECT_EQ(EncodedState::bytes_required(30), std::uint64_t{2} << 30);
}

TEST(Encoding, SpecialMagnitudesAreExact) {
  const Bounds b{0.1, 0.7};
  EXPECT_EQ(decode(encode(0.0, b), b), Complex(0.0));
  EXPECT_EQ(encode(0.0, b).b0, kCodeZero);
  for (int k = -128; k < 128; k += 16) {
    // Phases that are multiples of pi/128 survive exactly at r = 1.
    const double theta = kPi * k / 128.0;
    const EncodedAmplitude c = encode(std::polar(1.0, theta), b);
    EXPECT_EQ(c.b0, kCodeOne);
    EXPECT_LE(std::abs(decode(c, b) - std::polar(1.0, theta)), 1e-15);
  }
  EXPECT_EQ(decode(encode(1.0, b), b), Complex(1.0));
  EXPECT_EQ(decode(encode(-1.0, b), b), Complex(-1.0));
}

TEST(Encoding, RejectsMagnitudeAboveOne) {
  EXPECT_THROW(encode(1.01, Bounds{}), ExecutionError);
  EXPECT_NO_THROW(encode(1.0 + 1e-10, Bounds{}));
}

TEST(Encoding, RoundTripWithinBound) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 20000; ++trial) {
    double r0 = uni(gen) * 0.9;
    double r1 = r0 + uni(gen) * (1.0 - r0);
    if (trial % 10 == 0) r1 = r0;  // degenerate bounds
    const Bounds b{r0, r1};
    const double r = r0 + uni(gen) * (r1 - r0);
    const Complex z = std::polar(r, (uni(gen) * 2.0 - 1.0) * kPi);
    const Complex back = decode(encode(z, b), b);
    EXPECT_LE(std::abs(back - z), roundtrip_bound(b)) << "r0=" << r0 << " r1=" << r1 << " z=" << z;
  }
}

TEST(Encoding, TablesAgreeWithReference) {
  std::mt19937_64 gen(32);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const Bounds b{0.05, 0.6};
  const Decoder dec(b);
  const Encoder enc(b);
  for (int trial = 0; trial < 5000; ++trial) {
    const double r = trial % 7 == 0 ? 1.0 : b.r0 + uni(gen) * (b.r1 - b.r0);
    const Complex z = std::polar(r, (uni(gen) * 2.0 - 1.0) * kPi);
    EXPECT_EQ(enc(z), encode(z, b));
    EXPECT_LE(std::abs(dec(enc(z)) - decode(encode(z, b), b)), 1e-15);
  }
  EXPECT_EQ(enc(Complex(1.5, 0.0)).b0, kCodeOne);  // saturates
}

TEST(Encoding, PhaseShiftWraps) {
  EncodedAmplitude c{10, 120};
  c = shift_phase(c, 16);
  EXPECT_EQ(c.b1, -120);
  EncodedAmplitude zero{kCodeZero, 0};
  EXPECT_EQ(shift_phase(zero, 16), zero);
}

TEST(ChooseBounds, KeepsBoundsWithinOneStep) {
  const Bounds cur{0.2, 0.6};
  MagnitudeRange inside;
  inside.add(0.2 - cur.step() * 0.5);
  inside.add(0.6);
  EXPECT_EQ(choose_bounds(cur, inside), cur);
  MagnitudeRange wider;
  wider.add(0.1);
  wider.add(0.5);
  EXPECT_EQ(choose_bounds(cur, wider), (Bounds{0.1, 0.5}));
  EXPECT_EQ(choose_bounds(cur, MagnitudeRange{}), Bounds{});
}

TEST(Monomial, RecognizesPermutationPhaseGates) {
  Instruction x;
  x.opcode = Opcode::kX;
  x.qubits = {0};
  EXPECT_TRUE(as_monomial(gate_matrix(x)).has_value());
  Instruction h = x;
  h.opcode = Opcode::kH;
  EXPECT_FALSE(as_monomial(gate_matrix(h)).has_value());
  Instruction t = x;
  t.opcode = Opcode::kToffoli;
  t.qubits = {0, 1, 2};
  EXPECT_TRUE(as_monomial(gate_matrix(t)).has_value());
}

std::vector<Complex> exact_state(const Circuit& c) {
  ExactBackend b(c.n_qubits);
  for (const auto& i : c.instructions) {
    if (is_gate(i.opcode)) b.apply_gate(i);
  }
  auto a = b.state().amplitudes();
  return {a.begin(), a.end()};
}

TEST(EncodedEngine, HadamardWallAndGhz) {
  for (int n : {4, 9, 12}) {
    const auto r = run_encoded(gen_hadamard_wall(n));
    for (const auto& q : r.measurements[0].record.qubits) {
      EXPECT_NEAR(q.qx, 0.0, 1e-3);
      EXPECT_NEAR(q.qy, 0.5, 1e-3);
      EXPECT_NEAR(q.qz, 0.5, 1e-3);
    }
    const auto g = run_encoded(gen_ghz_chain(n));
    for (const auto& q : g.measurements[0].record.qubits) EXPECT_EQ(format_triplet(q), "0.500 0.500 0.500");
  }
}

TEST(EncodedEngine, MonomialGatesAreLossless) {
  // After one H wall all magnitudes share one code; Paulis, S, T, CNOT and
  // Toffoli must only permute codes and add exact phase offsets.
  Circuit c = gen_hadamard_wall(5);
  c.instructions.pop_back();
  for (const char* line : {"X 0", "Y 1", "Z 2", "S 3", "T 4", "CNOT 0 3", "TOFFOLI 1 2 4", "T+ 0", "S+ 2", "U 1 3 2"}) {
    c.instructions.push_back(parse_program(std::string("QUBITS 5\n") + line).instructions.back());
  }
  EncodedState s(5);
  for (const auto& i : c.instructions) s.apply(i);
  EXPECT_GT(s.monomial_gates(), 0u);
  const auto ref = exact_state(c);
  const auto got = s.decoded();
  // The single magnitude 2^{-5/2} sits on a code exactly (degenerate bounds).
  EXPECT_LE(oracle::max_abs_diff(got, ref), 1e-15);
}

TEST(EncodedEngine, RandomCircuitsStayClose) {
  std::mt19937_64 gen(33);
  double worst = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    oracle::RandomCircuitSpec spec;
    spec.n_qubits = 3 + trial % 4;
    spec.gates = 12;
    spec.toffoli = true;
    const Circuit c = oracle::random_circuit(spec, gen);
    const auto ref = oracle::simulate(c);
    const auto r = run_encoded(c);
    for (int j = 0; j < c.n_qubits; ++j) {
      const auto e = oracle::expectation(ref, j);
      const auto& q = r.measurements[0].record.qubits[j];
      worst = std::max({worst, std::abs(q.qx - e[0]), std::abs(q.qy - e[1]), std::abs(q.qz - e[2])});
    }
  }
  // A dozen lossy gates on a 2-byte code: percent-level agreement.
  EXPECT_LE(worst, 0.05);
}

// Lossy storage lets the norm drift; expectations must not scale with it.
TEST(EncodedEngine, ExpectationsIgnoreNormDrift) {
  std::mt19937_64 gen(37);
  const auto psi = oracle::random_state(5, gen);
  std::vector<Complex> scaled(psi.begin(), psi.end());
  for (auto& a : scaled) a *= 1.07;
  for (int j = 0; j < 5; ++j) {
    const auto e = oracle::expectation(psi, j);
    const QubitExpectation got = normalized_expectation(kernels::serial::pair_moments(scaled, j));
    EXPECT_NEAR(got.qx, e[0], 1e-14);
    EXPECT_NEAR(got.qy, e[1], 1e-14);
    EXPECT_NEAR(got.qz, e[2], 1e-14);
  }
}

TEST(EncodedEngine, AdderMatchesExact) {
  const auto r = run_encoded(gen_adder(5, 19, 10));
  const std::uint64_t sum = 29;
  for (int j = 0; j < 5; ++j) {
    EXPECT_NEAR(r.measurements.back().record.qubits[j].qz, static_cast<double>((sum >> j) & 1), 0.011);
  }
}

TEST(EncodedEngine, BoundsHistoryIsRecorded) {
  const auto r = run_encoded(gen_hadamard_wall(4));
  ASSERT_TRUE(r.diagnostics.contains("bounds_history"));
  EXPECT_GE(r.diagnostics["bounds_history"].size(), 2u);
  // After the wall every magnitude is 1/4.
  EXPECT_NEAR(r.diagnostics["bounds"][0].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(r.diagnostics["bounds"][1].get<double>(), 0.25, 1e-12);
}

TEST(EncodedEngine, ProjectionAndClear) {
  EXPECT_THROW(run_encoded(parse_program("QUBITS 2\nSET 1\n")), ExecutionError);
  const auto ok = run_encoded(parse_program("QUBITS 3\nH 0\nH 1\nCLEAR 0\nX 2\nSET 2\nBEGIN MEASUREMENT\n"));
  const auto& q = ok.measurements[0].record.qubits;
  EXPECT_NEAR(q[0].qz, 0.0, 1e-12);
  EXPECT_NEAR(q[1].qz, 0.5, 1e-3);
  EXPECT_NEAR(q[2].qz, 1.0, 1e-12);
}

TEST(EncodedEngine, EventsAreSeededAndDistributed) {
  const Circuit c = parse_program("QUBITS 2\nH 0\nH 1\nGENERATE EVENTS 8192 4\n");
  const auto a = run_encoded(c);
  const auto b = run_encoded(c);
  ASSERT_TRUE(a.events.has_value());
  EXPECT_EQ(a.events->events, b.events->events);
  std::map<Index, int> counts;
  for (Index e : a.events->events) ++counts[e];
  for (Index s = 0; s < 4; ++s) EXPECT_NEAR(counts[s], 2048, 5 * std::sqrt(8192 * 0.25 * 0.75));
}

TEST(EncodedEngine, ShorboxMatchesExact) {
  const Circuit c = gen_shor(10, {4, 15, 7}, 32, 3);
  const auto e = run_exact(c);
  const auto d = run_encoded(c);
  for (int j = 0; j < 10; ++j) {
    EXPECT_NEAR(d.measurements[0].record.qubits[j].qz, e.measurements[0].record.qubits[j].qz, 0.01);
  }
}

}  // namespace
}  // namespace qcsim
