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
#include <memory>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/interpreter.hpp"
#include "qcsim/transport.hpp"

namespace qcsim {

/// 2^N amplitudes split over K_h = 2^{N_h} ranks by the high-order index
/// bits; each rank holds K_l = 2^{N_l} consecutive amplitudes.
struct RankLayout {
  int n_qubits = 0;
  int n_high = 0;
  int n_low = 0;
  Index k_high = 1;
  Index k_low = 1;
};

/// Throws ValidationError unless 0 <= n_high < n.
RankLayout partition(int n_qubits, int n_high);

enum class SliceKind { kExact, kEncoded };

struct DistOptions {
  int n_high = 1;
  SliceKind slice = SliceKind::kExact;
  /// Total threads shared by the ranks; 0 means OpenMP's default.
  int threads = 0;
  /// Exchange buffer per rank in bytes; 0 means 2^{N-3} / K_h.
  std::uint64_t buffer_bytes = 0;
};

/// Distributed state driven through the Backend interface, plus the
/// inspection hooks used by tests and benchmarks.
class DistributedBackend : public Backend {
 public:
  virtual const RankLayout& layout() const = 0;
  /// Logical qubit -> current physical bit position.
  virtual const BitPermutation& permutation() const = 0;
  virtual const Transport& transport() const = 0;

  /// Exchanges physical bit `global_pos` (>= N_l) with `local_pos` (< N_l).
  virtual void swap_global_local(int global_pos, int local_pos) = 0;
  /// Brings every logical qubit back to its own bit position.
  virtual void restore_identity() = 0;

  /// Full state in logical index order, decoded (inspection only).
  virtual std::vector<Complex> gather() const = 0;
  /// Raw slice of one rank, decoded, in physical order (inspection only).
  virtual std::vector<Complex> slice(int rank) const = 0;

  virtual std::uint64_t swap_count() const = 0;
  /// Thread CPU seconds each rank spent applying gates to its slice.
  virtual std::vector<double> rank_local_seconds() const = 0;
  /// Amplitudes each rank updated in gate applications.
  virtual std::vector<std::uint64_t> rank_local_updates() const = 0;
};

std::unique_ptr<DistributedBackend> make_distributed(int n_qubits, const DistOptions& options);

RunResult run_distributed(const Circuit& circuit, const DistOptions& dist,
                          const RunOptions& options = {});

}  // namespace qcsim
