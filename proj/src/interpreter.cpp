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

#include "qcsim/interpreter.hpp"

#include <cmath>
#include <string>

namespace qcsim {

namespace {

std::uint64_t resolve_seed(std::int64_t requested, const RunOptions& options) {
  if (requested > 0) return static_cast<std::uint64_t>(requested);
  return options.entropy_override ? *options.entropy_override : Rng::entropy_seed();
}

Instruction pauli(Opcode op, int qubit) {
  Instruction instr;
  instr.opcode = op;
  instr.qubits = {qubit};
  return instr;
}

}  // namespace

RunResult run_circuit(const Circuit& circuit, Backend& backend, const RunOptions& options) {
  if (backend.n_qubits() != circuit.n_qubits) {
    throw std::invalid_argument("run_circuit: backend size does not match circuit");
  }
  RunResult result;
  result.n_qubits = circuit.n_qubits;
  result.engine = std::string(backend.name());
  backend.set_bit_assignment(circuit.bit_assignment);

  Rng measure_rng(options.seed, Rng::kMeasure);
  std::optional<Rng> noise_rng;
  std::int64_t noise_events = 0;
  const NoiseConfig noise = circuit.noise.value_or(NoiseConfig{});
  if (noise.active()) {
    const std::uint64_t seed = resolve_seed(noise.seed, options);
    noise_rng.emplace(seed, Rng::kNoise);
    result.diagnostics["noise_seed"] = seed;
  }

  for (const Instruction& instr : circuit.instructions) {
    const Opcode op = instr.opcode;
    if (is_gate(op)) {
      backend.apply_gate(instr);
      if (noise_rng) {
        const double px = noise.p_x;
        const double pxy = px + noise.p_y;
        const double pxyz = pxy + noise.p_z;
        for (int q = 0; q < circuit.n_qubits; ++q) {
          const double u = noise_rng->uniform();
          if (u < px) {
            backend.apply_gate(pauli(Opcode::kX, q));
          } else if (u < pxy) {
            backend.apply_gate(pauli(Opcode::kY, q));
          } else if (u < pxyz) {
            backend.apply_gate(pauli(Opcode::kZ, q));
          } else {
            continue;
          }
          ++noise_events;
        }
      }
      continue;
    }
    switch (op) {
      case Opcode::kBeginMeasurement:
        result.measurements.push_back({instr.line, false, backend.expectations()});
        break;
      case Opcode::kMeasure: {
        const int q = instr.qubits.at(0);
        const auto [p0, p1] = backend.branch_weights(q);
        const double total = p0 + p1;
        const int outcome = measure_rng.uniform() * total < p1 ? 1 : 0;
        const double kept = outcome ? p1 : p0;
        backend.project(q, outcome, 1.0 / std::sqrt(kept));
        result.projections.push_back({instr.line, q, outcome});
        break;
      }
      case Opcode::kClear:
      case Opcode::kSet: {
        const int q = instr.qubits.at(0);
        const int bit = op == Opcode::kSet ? 1 : 0;
        const auto [p0, p1] = backend.branch_weights(q);
        const double kept = bit ? p1 : p0;
        if (kept < kZeroProjection) {
          throw ExecutionError(std::string(mnemonic(op)) + " " + std::to_string(q) +
                               (instr.line > 0 ? " (line " + std::to_string(instr.line) + ")" : "") +
                               ": projection results in a state with amplitude zero");
        }
        backend.project(q, bit, 1.0 / std::sqrt(kept));
        break;
      }
      case Opcode::kShorbox:
        backend.shorbox(shor_params(instr));
        break;
      case Opcode::kGenerateEvents: {
        EventList events;
        events.n_qubits = circuit.n_qubits;
        events.seed = resolve_seed(instr.ints.at(1), options);
        Rng rng(events.seed, Rng::kEvents);
        events.events = backend.sample(instr.ints.at(0), rng);
        result.events = std::move(events);
        result.exited = true;
        break;
      }
      case Opcode::kExit:
        result.measurements.push_back({instr.line, true, backend.expectations()});
        result.exited = true;
        break;
      default:
        break;  // QUBITS, BIT ASSIGNMENT and DEPOLARIZING CHANNEL are configuration.
    }
    if (result.exited) break;
  }
  result.diagnostics["noise_events"] = noise_events;
  const nlohmann::json extra = backend.diagnostics();
  for (const auto& [key, value] : extra.items()) result.diagnostics[key] = value;
  return result;
}

}  // namespace qcsim
