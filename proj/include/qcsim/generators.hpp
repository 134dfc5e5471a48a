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
#include <vector>

#include "qcsim/circuit.hpp"

namespace qcsim {

/// H on every qubit followed by BEGIN MEASUREMENT.
Circuit gen_hadamard_wall(int n);

/// H 0, CNOT 0 1, ..., CNOT n-2 n-1, BEGIN MEASUREMENT.
Circuit gen_ghz_chain(int n);

/// Quantum Fourier transform on `targets` (targets[0] is the least
/// significant bit of the register value). Built from H and controlled
/// phases; the final bit reversal uses three CNOTs per swap.
std::vector<Instruction> gen_qft(const std::vector<int>& targets, bool inverse);

/// Adds b into a modulo 2^k_bits. Register 1 (qubits 0..k-1) holds a and
/// receives the sum; register 2 (qubits k..2k-1) holds b.
/// `n_qubits` defaults to 2*k_bits. An optional BIT ASSIGNMENT is emitted
/// right after QUBITS.
Circuit gen_adder(int k_bits, std::uint64_t a, std::uint64_t b, int n_qubits = 0,
                  const std::optional<BitPermutation>& assignment = std::nullopt);

/// SHORBOX, QFT on the x-register (qubits 0..n_x-1), BEGIN MEASUREMENT and
/// GENERATE EVENTS.
Circuit gen_shor(int n, const ShorParams& params, std::int64_t events = 64, std::int64_t seed = 1);

}  // namespace qcsim
