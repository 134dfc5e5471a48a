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
#include <string>
#include <string_view>
#include <vector>

#include "qcsim/types.hpp"

namespace qcsim {

enum class Opcode {
  kI,
  kH,
  kX,
  kY,
  kZ,
  kS,
  kSDag,
  kT,
  kTDag,
  kU1,
  kU2,
  kU3,
  kPlusX,
  kMinusX,
  kPlusY,
  kMinusY,
  kR,
  kRDag,
  kCnot,
  kCPhase,
  kCPhaseDag,
  kToffoli,
  kBeginMeasurement,
  kGenerateEvents,
  kMeasure,
  kQubits,
  kBitAssignment,
  kShorbox,
  kClear,
  kSet,
  kDepolarizingChannel,
  kExit,
};

/// Canonical mnemonic as written by the pretty printer.
std::string_view mnemonic(Opcode op);

/// True for the unitary gate instructions (those with a defining matrix).
bool is_gate(Opcode op);

/// Number of qubit operands a gate takes (1, 2 or 3); 0 for directives.
int gate_arity(Opcode op);

/// One parsed statement. Which parameter slots are populated depends on the
/// opcode:
///   U1: angles = {lambda}; U2: {phi, lambda}; U3: {theta, phi, lambda}
///   R/RDag/CPhase/CPhaseDag: ints = {k} with k >= 0
///   GENERATE EVENTS: ints = {events, seed}
///   SHORBOX: ints = {n_x, G, y}
///   DEPOLARIZING CHANNEL: angles = {p_x, p_y, p_z}, ints = {seed}
///   BIT ASSIGNMENT: ints = permutation
struct Instruction {
  Opcode opcode = Opcode::kI;
  std::vector<int> qubits;
  std::vector<double> angles;
  std::vector<std::int64_t> ints;
  int line = 0;  // 1-based source line, 0 when generated

  /// Equality ignores the source line.
  friend bool operator==(const Instruction& a, const Instruction& b) {
    return a.opcode == b.opcode && a.qubits == b.qubits && a.angles == b.angles &&
           a.ints == b.ints;
  }
};

/// Maps logical qubit j to bit position perm[j].
class BitPermutation {
 public:
  BitPermutation() = default;
  explicit BitPermutation(std::vector<int> perm);

  static BitPermutation identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int operator[](int logical) const { return perm_[logical]; }
  const std::vector<int>& values() const { return perm_; }
  bool is_identity() const;

  BitPermutation inverse() const;
  /// (a.then(b))[j] == b[a[j]]
  BitPermutation then(const BitPermutation& next) const;

  /// Exchanges the images of two logical qubits.
  void swap_logical(int a, int b);

  friend bool operator==(const BitPermutation&, const BitPermutation&) = default;

  static bool is_bijection(const std::vector<int>& perm);

 private:
  std::vector<int> perm_;
};

struct NoiseConfig {
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;
  std::int64_t seed = 0;

  bool active() const { return p_x > 0.0 || p_y > 0.0 || p_z > 0.0; }
  friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

struct ShorParams {
  int n_x = 0;
  std::uint64_t modulus = 0;  // G
  std::uint64_t base = 0;     // y
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Instruction> instructions;
  BitPermutation bit_assignment;
  std::optional<NoiseConfig> noise;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class Severity { kWarning, kError };

struct ValidationIssue {
  Severity severity;
  int line;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool empty() const { return issues.empty(); }
  bool has_errors() const;
  std::string to_string() const;
};

/// Parses the assembler-like circuit language. Throws ParseError.
Circuit parse_program(std::string_view text);

/// Emits the circuit in the same language; parse_program(pretty_print(c)) == c.
std::string pretty_print(const Circuit& circuit);
std::string format_instruction(const Instruction& instr);

ValidationReport validate(const Circuit& circuit);

ShorParams shor_params(const Instruction& shorbox);

/// Index of the first EXIT instruction, or instructions.size() if none.
std::size_t exit_position(const Circuit& circuit);

}  // namespace qcsim
