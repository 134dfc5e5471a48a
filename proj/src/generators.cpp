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

#include "qcsim/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcsim/bits.hpp"

namespace qcsim {

namespace {

Instruction gate(Opcode op, std::vector<int> qubits, std::vector<std::int64_t> ints = {}) {
  Instruction instr;
  instr.opcode = op;
  instr.qubits = std::move(qubits);
  instr.ints = std::move(ints);
  return instr;
}

Instruction directive(Opcode op, std::vector<std::int64_t> ints = {}) {
  Instruction instr;
  instr.opcode = op;
  instr.ints = std::move(ints);
  return instr;
}

void check_size(int n, int min) {
  if (n < min || n > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) + " out of range");
  }
}

Circuit empty_circuit(int n) {
  Circuit c;
  c.n_qubits = n;
  c.bit_assignment = BitPermutation::identity(n);
  return c;
}

}  // namespace

Circuit gen_hadamard_wall(int n) {
  check_size(n, 2);
  Circuit c = empty_circuit(n);
  for (int j = 0; j < n; ++j) c.instructions.push_back(gate(Opcode::kH, {j}));
  c.instructions.push_back(directive(Opcode::kBeginMeasurement));
  return c;
}

Circuit gen_ghz_chain(int n) {
  check_size(n, 2);
  Circuit c = empty_circuit(n);
  c.instructions.push_back(gate(Opcode::kH, {0}));
  for (int j = 0; j + 1 < n; ++j) c.instructions.push_back(gate(Opcode::kCnot, {j, j + 1}));
  c.instructions.push_back(directive(Opcode::kBeginMeasurement));
  return c;
}

std::vector<Instruction> gen_qft(const std::vector<int>& targets, bool inverse) {
  const int n = static_cast<int>(targets.size());
  for (int a = 0; a < n; ++a) {
    if (targets[a] < 0) throw std::invalid_argument("gen_qft: negative qubit index");
    for (int b = a + 1; b < n; ++b) {
      if (targets[a] == targets[b]) throw std::invalid_argument("gen_qft: duplicate targets");
    }
  }
  std::vector<Instruction> out;
  for (int j = n - 1; j >= 0; --j) {
    out.push_back(gate(Opcode::kH, {targets[j]}));
    for (int m = j - 1; m >= 0; --m) {
      out.push_back(gate(Opcode::kCPhase, {targets[m], targets[j]}, {j - m + 1}));
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    const int a = targets[i];
    const int b = targets[n - 1 - i];
    out.push_back(gate(Opcode::kCnot, {a, b}));
    out.push_back(gate(Opcode::kCnot, {b, a}));
    out.push_back(gate(Opcode::kCnot, {a, b}));
  }
  if (inverse) {
    std::reverse(out.begin(), out.end());
    for (auto& instr : out) {
      if (instr.opcode == Opcode::kCPhase) instr.opcode = Opcode::kCPhaseDag;
    }
  }
  return out;
}

Circuit gen_adder(int k_bits, std::uint64_t a, std::uint64_t b, int n_qubits,
                  const std::optional<BitPermutation>& assignment) {
  if (k_bits < 1 || k_bits > 31) throw std::invalid_argument("gen_adder: k_bits out of range");
  if (n_qubits == 0) n_qubits = 2 * k_bits;
  check_size(n_qubits, 2);
  if (2 * k_bits > n_qubits) throw std::invalid_argument("gen_adder: register overflow");
  const std::uint64_t limit = bits::pow2(k_bits);
  if (a >= limit || b >= limit) throw std::invalid_argument("gen_adder: operand exceeds 2^k_bits");

  Circuit c = empty_circuit(n_qubits);
  if (assignment) {
    if (assignment->size() != n_qubits) throw std::invalid_argument("gen_adder: bad assignment");
    c.bit_assignment = *assignment;
    c.instructions.push_back(
        directive(Opcode::kBitAssignment,
                  std::vector<std::int64_t>(assignment->values().begin(), assignment->values().end())));
  }
  std::vector<int> reg1;
  for (int i = 0; i < k_bits; ++i) {
    reg1.push_back(i);
    if (bits::test(b, i)) c.instructions.push_back(gate(Opcode::kX, {k_bits + i}));
  }
  for (int i = 0; i < k_bits; ++i) {
    if (bits::test(a, i)) c.instructions.push_back(gate(Opcode::kX, {i}));
  }
  for (auto& instr : gen_qft(reg1, false)) c.instructions.push_back(std::move(instr));
  // Multiply |y> by exp(2 pi i b y / 2^k): bit i of b and bit m of y
  // contribute 2 pi / 2^(k - i - m) whenever i + m < k.
  for (int m = k_bits - 1; m >= 0; --m) {
    for (int i = 0; i + m < k_bits; ++i) {
      c.instructions.push_back(gate(Opcode::kCPhase, {k_bits + i, m}, {k_bits - i - m}));
    }
  }
  for (auto& instr : gen_qft(reg1, true)) c.instructions.push_back(std::move(instr));
  c.instructions.push_back(directive(Opcode::kBeginMeasurement));
  return c;
}

Circuit gen_shor(int n, const ShorParams& params, std::int64_t events, std::int64_t seed) {
  check_size(n, 2);
  if (params.n_x < 1 || params.n_x >= n) throw std::invalid_argument("gen_shor: bad n_x");
  if (params.modulus < 2 || params.modulus >= bits::pow2(32)) {
    throw std::invalid_argument("gen_shor: modulus out of range");
  }
  if (params.base < 1 || params.base >= params.modulus) {
    throw std::invalid_argument("gen_shor: base must satisfy 1 <= y < G");
  }
  if (n - params.n_x < bits::ceil_log2(params.modulus)) {
    throw std::invalid_argument("gen_shor: f-register too small for G");
  }
  if (events <= 0) throw std::invalid_argument("gen_shor: events must be positive");
  Circuit c = empty_circuit(n);
  c.instructions.push_back(directive(
      Opcode::kShorbox, {params.n_x, static_cast<std::int64_t>(params.modulus),
                         static_cast<std::int64_t>(params.base)}));
  std::vector<int> xreg;
  for (int i = 0; i < params.n_x; ++i) xreg.push_back(i);
  for (auto& instr : gen_qft(xreg, false)) c.instructions.push_back(std::move(instr));
  c.instructions.push_back(directive(Opcode::kBeginMeasurement));
  c.instructions.push_back(directive(Opcode::kGenerateEvents, {events, seed}));
  return c;
}

}  // namespace qcsim
