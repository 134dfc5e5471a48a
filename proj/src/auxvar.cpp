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

#include "qcsim/auxvar.hpp"

#include <omp.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>

#include "qcsim/kernels.hpp"

namespace qcsim {

HsParameter solve_hs(double a) {
  const Complex target = std::exp(Complex(0.0, a / 2.0));
  return {a, 0.5 * std::acos(target)};
}

GateMatrix hs_factor(const HsParameter& hs, int s) {
  const Complex phi = hs.x * static_cast<double>(s) - hs.a / 4.0;
  const Complex i(0.0, 1.0);
  return GateMatrix::diagonal({std::exp(i * phi), std::exp(-i * phi)});
}

GateMatrix hs_reconstruct(const HsParameter& hs) {
  GateMatrix sum = GateMatrix::diagonal({0.0, 0.0, 0.0, 0.0});
  for (int s : {1, -1}) {
    const GateMatrix d = hs_factor(hs, s);
    const GateMatrix k = kron(d, d);
    for (std::size_t e = 0; e < sum.entries.size(); ++e) sum.entries[e] += 0.5 * k.entries[e];
  }
  return sum;
}

namespace {

PathStep matrix_step(const GateMatrix& u) {
  PathStep step;
  step.matrix = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
  return step;
}

PathStep factor_step(int f) {
  PathStep step;
  step.factor = f;
  return step;
}

// Per-worker evaluation state: the configuration bits and each qubit's
// timeline result W_j(s)|0>.
struct Walker {
  template <typename T>
  using Vec = std::vector<T, CountingAllocator<T>>;

  const PathProgram& program;
  Vec<std::array<Complex, 4>> plus_minus;  // per factor and s: e^{i phi}, e^{-i phi}
  std::uint64_t config = 0;
  Vec<std::array<Complex, 2>> vectors;

  Walker(const PathProgram& p, std::span<const std::array<Complex, 4>> phases, MemoryAccount* account)
      : program(p),
        plus_minus(phases.begin(), phases.end(), CountingAllocator<std::array<Complex, 4>>(account)),
        vectors(static_cast<std::size_t>(p.n_qubits), CountingAllocator<std::array<Complex, 2>>(account)) {}

  void evaluate(int q) {
    Complex v0 = 1.0;
    Complex v1 = 0.0;
    for (const PathStep& step : program.timelines[static_cast<std::size_t>(q)]) {
      if (step.factor >= 0) {
        const int s_bit = static_cast<int>((config >> step.factor) & 1U);
        const auto& e = plus_minus[static_cast<std::size_t>(step.factor)];
        v0 *= e[static_cast<std::size_t>(2 * s_bit)];
        v1 *= e[static_cast<std::size_t>(2 * s_bit + 1)];
      } else {
        const auto& m = step.matrix;
        const Complex n0 = m[0] * v0 + m[1] * v1;
        const Complex n1 = m[2] * v0 + m[3] * v1;
        v0 = n0;
        v1 = n1;
      }
    }
    vectors[static_cast<std::size_t>(q)] = {v0, v1};
  }

  void reset(std::uint64_t c) {
    config = c;
    for (int q = 0; q < program.n_qubits; ++q) evaluate(q);
  }

  void flip(int factor) {
    config ^= std::uint64_t{1} << factor;
    const PathFactor& f = program.factors[static_cast<std::size_t>(factor)];
    evaluate(f.qubit_a);
    evaluate(f.qubit_b);
  }
};

}  // namespace

PathProgram compile_to_paths(const Circuit& circuit) {
  PathProgram program;
  program.n_qubits = circuit.n_qubits;
  program.timelines.resize(static_cast<std::size_t>(circuit.n_qubits));
  if (circuit.noise && circuit.noise->active()) {
    throw UnsupportedInstruction("DEPOLARIZING CHANNEL", 0);
  }
  auto add_factor = [&](int qa, int qb, double angle) {
    const int f = static_cast<int>(program.factors.size());
    program.factors.push_back({qa, qb, solve_hs(angle)});
    program.timelines[static_cast<std::size_t>(qa)].push_back(factor_step(f));
    program.timelines[static_cast<std::size_t>(qb)].push_back(factor_step(f));
  };
  for (const Instruction& instr : circuit.instructions) {
    const Opcode op = instr.opcode;
    if (op == Opcode::kGenerateEvents || op == Opcode::kExit) break;
    switch (op) {
      case Opcode::kQubits:
      case Opcode::kBitAssignment:
      case Opcode::kBeginMeasurement:
      case Opcode::kDepolarizingChannel:
        continue;
      case Opcode::kCnot: {
        const int c = instr.qubits[0];
        const int t = instr.qubits[1];
        auto& line = program.timelines[static_cast<std::size_t>(t)];
        line.push_back(matrix_step(gates::hadamard()));
        add_factor(c, t, std::numbers::pi);
        line.push_back(matrix_step(gates::hadamard()));
        continue;
      }
      case Opcode::kCPhase:
      case Opcode::kCPhaseDag:
        add_factor(instr.qubits[0], instr.qubits[1],
                   angle_from_exponent(instr.ints.at(0), op == Opcode::kCPhaseDag));
        continue;
      default:
        break;
    }
    if (is_gate(op) && gate_arity(op) == 1) {
      program.timelines[static_cast<std::size_t>(instr.qubits[0])].push_back(
          matrix_step(gate_matrix(instr)));
      continue;
    }
    throw UnsupportedInstruction(std::string(mnemonic(op)), instr.line);
  }
  if (program.p_count() > 62) {
    throw ResourceError("auxvar engine: " + std::to_string(program.p_count()) +
                        " entangling gates exceed the configuration counter");
  }
  return program;
}

double cost_estimate(const PathProgram& program, std::size_t queries) {
  return static_cast<double>(program.n_qubits) * static_cast<double>(queries) *
         std::ldexp(1.0, program.p_count());
}

std::vector<Complex> amplitudes(const PathProgram& program, std::span<const Index> basis_states,
                                AuxvarStats* stats, int chunks) {
  const int p = program.p_count();
  const int n = program.n_qubits;
  const std::size_t m = basis_states.size();
  const std::uint64_t total = std::uint64_t{1} << p;
  const std::uint64_t n_chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(std::max(chunks, 1)));
  MemoryAccount account;

  std::vector<std::array<Complex, 4>, CountingAllocator<std::array<Complex, 4>>> phases{
      CountingAllocator<std::array<Complex, 4>>(&account)};
  phases.reserve(program.factors.size());
  for (const auto& f : program.factors) {
    const GateMatrix plus = hs_factor(f.hs, 1);
    const GateMatrix minus = hs_factor(f.hs, -1);
    phases.push_back({plus(0, 0), plus(1, 1), minus(0, 0), minus(1, 1)});
  }

  using Alloc = CountingAllocator<double>;
  // Per chunk: real and imaginary sums and their compensations.
  std::vector<std::vector<double, Alloc>> sums;
  sums.reserve(n_chunks);
  for (std::uint64_t c = 0; c < n_chunks; ++c) sums.emplace_back(4 * m, 0.0, Alloc(&account));

#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::thread_budget())
  for (std::uint64_t c = 0; c < n_chunks; ++c) {
    const std::uint64_t begin = total / n_chunks * c;
    const std::uint64_t end = c + 1 == n_chunks ? total : total / n_chunks * (c + 1);
    Walker walker(program, phases, &account);
    double* acc = sums[c].data();
    for (std::uint64_t g = begin; g < end; ++g) {
      const std::uint64_t gray = g ^ (g >> 1);
      if (g == begin) {
        walker.reset(gray);
      } else {
        walker.flip(std::countr_zero(g));
      }
      for (std::size_t q = 0; q < m; ++q) {
        Complex prod = 1.0;
        const Index b = basis_states[q];
        for (int j = 0; j < n; ++j) {
          prod *= walker.vectors[static_cast<std::size_t>(j)][(b >> j) & 1U];
        }
        // Kahan-compensated accumulation of both parts.
        for (int part = 0; part < 2; ++part) {
          double& sum = acc[4 * q + static_cast<std::size_t>(2 * part)];
          double& comp = acc[4 * q + static_cast<std::size_t>(2 * part) + 1];
          const double y = (part == 0 ? prod.real() : prod.imag()) - comp;
          const double t = sum + y;
          comp = (t - sum) - y;
          sum = t;
        }
      }
    }
  }

  const double weight = std::ldexp(1.0, -p);
  std::vector<Complex> out(m);
  for (std::size_t q = 0; q < m; ++q) {
    double re = 0.0;
    double im = 0.0;
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
      re += sums[c][4 * q];
      im += sums[c][4 * q + 2];
    }
    out[q] = Complex(re, im) * weight;
  }
  if (stats) {
    stats->configurations = total;
    stats->peak_bytes = account.peak.load();
    stats->chunks = static_cast<int>(n_chunks);
  }
  return out;
}

Index parse_basis_label(std::string_view label, int n_qubits) {
  Index value = 0;
  if (label.size() > 2 && label[0] == '0' && (label[1] == 'x' || label[1] == 'X')) {
    const auto* first = label.data() + 2;
    const auto* last = label.data() + label.size();
    auto [ptr, ec] = std::from_chars(first, last, value, 16);
    if (ec != std::errc() || ptr != last) {
      throw ValidationError("malformed basis label '" + std::string(label) + "'");
    }
  } else {
    if (label.empty() || label.size() > static_cast<std::size_t>(n_qubits)) {
      throw ValidationError("basis label '" + std::string(label) + "' must have at most " +
                            std::to_string(n_qubits) + " bits");
    }
    for (char ch : label) {
      if (ch != '0' && ch != '1') {
        throw ValidationError("malformed basis label '" + std::string(label) + "'");
      }
      value = (value << 1) | static_cast<Index>(ch - '0');
    }
  }
  if (n_qubits < 64 && value >= (Index{1} << n_qubits)) {
    throw ValidationError("basis label '" + std::string(label) + "' exceeds the register");
  }
  return value;
}

}  // namespace qcsim
