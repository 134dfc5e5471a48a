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
#include <random>
#include <sstream>

#include "qcsim/circuit.hpp"
#include "qcsim/generators.hpp"

namespace qcsim {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Instruction> gates_only(const Circuit& c) {
  std::vector<Instruction> out;
  for (const auto& i : c.instructions) {
    if (is_gate(i.opcode)) out.push_back(i);
  }
  return out;
}

TEST(Parse, BellPair) {
  const Circuit c = parse_program("QUBITS 2\nH 0\nCNOT 0 1\n");
  EXPECT_EQ(c.n_qubits, 2);
  const auto g = gates_only(c);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].opcode, Opcode::kH);
  EXPECT_EQ(g[0].qubits, std::vector<int>{0});
  EXPECT_EQ(g[1].opcode, Opcode::kCnot);
  EXPECT_EQ(g[1].qubits, (std::vector<int>{0, 1}));
  EXPECT_EQ(g[1].line, 3);
}

TEST(Parse, CommentLinesAreSkipped) {
  const Circuit c = parse_program("QUBITS 2\n! H 0\n   ! indented\nX 1\n");
  const auto g = gates_only(c);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].opcode, Opcode::kX);
  EXPECT_EQ(g[0].qubits, std::vector<int>{1});
}

TEST(Parse, QubitsMustComeFirst) {
  try {
    parse_program("H 0\nQUBITS 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("QUBITS must be first"), std::string::npos);
    EXPECT_EQ(e.line(), 1);
  }
}

TEST(Parse, UnknownMnemonicNamesTheLine) {
  try {
    parse_program("QUBITS 2\nH 0\nFOO 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("FOO"), std::string::npos);
  }
}

TEST(Parse, RejectsBadOperands) {
  EXPECT_THROW(parse_program("QUBITS 2\nH 2\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 2\nCNOT 1 1\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 3\nTOFFOLI 0 2 0\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 2\nH\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 1\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 64\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 3\nBIT ASSIGNMENT 0 0 1\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 3\nBIT ASSIGNMENT 0 1\n"), ParseError);
}

TEST(Parse, MnemonicsAreCaseInsensitive) {
  const Circuit a = parse_program("QUBITS 3\nH 0\nCNOT 0 1\nBEGIN MEASUREMENT\n");
  const Circuit b = parse_program("qubits 3\nh 0\ncnot 0 1\nbegin measurement\n");
  EXPECT_EQ(a, b);
}

TEST(Parse, PhaseExponentSignSelectsDagger) {
  const Circuit c = parse_program("QUBITS 2\nR 0 3\nR 0 -3\nU 0 1 2\nU 0 1 -2\n");
  const auto g = gates_only(c);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[0].opcode, Opcode::kR);
  EXPECT_EQ(g[1].opcode, Opcode::kRDag);
  EXPECT_EQ(g[2].opcode, Opcode::kCPhase);
  EXPECT_EQ(g[3].opcode, Opcode::kCPhaseDag);
  EXPECT_EQ(g[1].ints, std::vector<std::int64_t>{3});
}

TEST(Parse, DepolarizingKeywordsInAnyOrder) {
  const Circuit c = parse_program("QUBITS 2\nDEPOLARIZING CHANNEL SEED = 7 , P_Z = 0.25 , P_X = 0.5\nH 0\n");
  ASSERT_TRUE(c.noise.has_value());
  EXPECT_DOUBLE_EQ(c.noise->p_x, 0.5);
  EXPECT_DOUBLE_EQ(c.noise->p_y, 0.0);
  EXPECT_DOUBLE_EQ(c.noise->p_z, 0.25);
  EXPECT_EQ(c.noise->seed, 7);
  EXPECT_THROW(parse_program("QUBITS 2\nDEPOLARIZING CHANNEL P_X = 0.6 , P_Y = 0.6\n"), ParseError);
  EXPECT_THROW(parse_program("QUBITS 2\nDEPOLARIZING CHANNEL P_X = -0.1\n"), ParseError);
}

TEST(Parse, BitAssignmentSetsPermutation) {
  const Circuit c = parse_program("QUBITS 4\nBIT ASSIGNMENT 2 3 1 0\nH 0\n");
  EXPECT_EQ(c.bit_assignment.values(), (std::vector<int>{2, 3, 1, 0}));
}

TEST(Parse, CorpusFilesParseAndValidate) {
  for (const auto& entry : std::filesystem::directory_iterator(QCSIM_CORPUS_DIR)) {
    if (entry.path().extension() != ".qc") continue;
    SCOPED_TRACE(entry.path().string());
    const Circuit c = parse_program(slurp(entry.path()));
    EXPECT_FALSE(validate(c).has_errors()) << validate(c).to_string();
  }
}

// Random circuits over the whole gate set survive pretty_print -> parse.
TEST(Parse, PrettyPrintRoundTrip) {
  std::mt19937_64 gen(2024);
  const std::vector<std::string> single{"I", "H", "X", "Y", "Z", "S", "S+", "T", "T+", "+X", "-X", "+Y", "-Y"};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(gen() % 6);
    std::ostringstream src;
    src << "QUBITS " << n << "\n";
    auto q = [&] { return static_cast<int>(gen() % n); };
    for (int g = 0; g < 25; ++g) {
      const int a = q();
      int b = q();
      while (b == a) b = q();
      int c = q();
      while (c == a || c == b) c = q();
      switch (gen() % 8) {
        case 0: src << single[gen() % single.size()] << ' ' << a << '\n'; break;
        case 1: src << "U1 " << a << ' ' << 0.25 * static_cast<double>(gen() % 13) << '\n'; break;
        case 2: src << "U3 " << a << " 0.125 -1.5 2.75\n"; break;
        case 3: src << "R " << a << ' ' << (static_cast<int>(gen() % 9) - 4) << '\n'; break;
        case 4: src << "CNOT " << a << ' ' << b << '\n'; break;
        case 5: src << "U " << a << ' ' << b << ' ' << (static_cast<int>(gen() % 9) - 4) << '\n'; break;
        case 6: src << "TOFFOLI " << a << ' ' << b << ' ' << c << '\n'; break;
        default: src << "U2 " << a << " 0.5 0.0625\n"; break;
      }
    }
    src << "BEGIN MEASUREMENT\nM 0\nGENERATE EVENTS 10 3\n";
    const Circuit first = parse_program(src.str());
    const Circuit second = parse_program(pretty_print(first));
    EXPECT_EQ(first, second) << pretty_print(first);
  }
}

TEST(Validate, GhzIsClean) { EXPECT_TRUE(validate(gen_ghz_chain(6)).empty()); }

TEST(Validate, ShorboxRegisterOverflow) {
  const Circuit c = parse_program("QUBITS 28\nSHORBOX 20 1007 529\n");
  const ValidationReport r = validate(c);
  EXPECT_TRUE(r.has_errors());
  EXPECT_NE(r.to_string().find("f-register"), std::string::npos) << r.to_string();
}

TEST(Validate, BitAssignmentAfterGate) {
  const Circuit c = parse_program("QUBITS 2\nH 0\nBIT ASSIGNMENT 1 0\n");
  const ValidationReport r = validate(c);
  EXPECT_TRUE(r.has_errors());
  EXPECT_NE(r.to_string().find("BIT ASSIGNMENT"), std::string::npos);
}

TEST(Validate, InstructionsAfterExitAreUnreachable) {
  const Circuit c = parse_program("QUBITS 2\nH 0\nEXIT\nX 1\n");
  const ValidationReport r = validate(c);
  EXPECT_FALSE(r.has_errors());
  ASSERT_FALSE(r.empty());
  EXPECT_NE(r.to_string().find("unreachable"), std::string::npos);
}

TEST(Permutation, InverseAndComposition) {
  const BitPermutation p({2, 0, 3, 1});
  EXPECT_TRUE(p.then(p.inverse()).is_identity());
  EXPECT_TRUE(p.inverse().then(p).is_identity());
  BitPermutation q = p;
  q.swap_logical(0, 1);
  EXPECT_EQ(q.values(), (std::vector<int>{0, 2, 3, 1}));
  EXPECT_FALSE(BitPermutation::is_bijection({0, 2, 2}));
  EXPECT_THROW(BitPermutation({1, 1}), std::invalid_argument);
}

TEST(Generators, HadamardWall) {
  const auto g = gates_only(gen_hadamard_wall(2));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].qubits, std::vector<int>{0});
  EXPECT_EQ(g[1].qubits, std::vector<int>{1});
  EXPECT_EQ(gates_only(gen_hadamard_wall(45)).size(), 45u);
  EXPECT_THROW(gen_hadamard_wall(1), std::invalid_argument);
}

TEST(Generators, GhzChain) {
  const auto g = gates_only(gen_ghz_chain(4));
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[0].opcode, Opcode::kH);
  for (int k = 1; k < 4; ++k) {
    EXPECT_EQ(g[k].opcode, Opcode::kCnot);
    EXPECT_EQ(g[k].qubits, (std::vector<int>{k - 1, k}));
  }
}

TEST(Generators, QftShape) {
  const auto one = gen_qft({5}, false);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].opcode, Opcode::kH);
  // n H gates, n(n-1)/2 controlled phases, 3 floor(n/2) CNOTs.
  const auto four = gen_qft({0, 1, 2, 3}, false);
  EXPECT_EQ(four.size(), 4u + 6u + 6u);
  const auto inv = gen_qft({0, 1, 2, 3}, true);
  ASSERT_EQ(inv.size(), four.size());
  for (const auto& i : inv) EXPECT_NE(i.opcode, Opcode::kCPhase);
  EXPECT_THROW(gen_qft({1, 1}, false), std::invalid_argument);
}

TEST(Generators, AdderValidation) {
  EXPECT_THROW(gen_adder(4, 16, 0), std::invalid_argument);
  EXPECT_THROW(gen_adder(4, 1, 1, 7), std::invalid_argument);
  EXPECT_FALSE(validate(gen_adder(4, 3, 5)).has_errors());
}

}  // namespace
}  // namespace qcsim
