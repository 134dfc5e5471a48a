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

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/gates.hpp"
#include "qcsim/types.hpp"

namespace qcsim {

/// A circuit instruction the path-sum engine cannot express. Names the
/// instruction and its line.
class UnsupportedInstruction : public ValidationError {
 public:
  UnsupportedInstruction(std::string mnemonic, int line)
      : ValidationError("auxvar engine: unsupported instruction " + mnemonic +
                        (line > 0 ? " (line " + std::to_string(line) + ")" : std::string())),
        mnemonic_(std::move(mnemonic)),
        line_(line) {}

  const std::string& mnemonic() const { return mnemonic_; }
  int line() const { return line_; }

 private:
  std::string mnemonic_;
  int line_;
};

/// Solution of cos 2x = e^{ia/2}; x = acos(e^{ia/2}) / 2 on the principal
/// branch, generally complex.
struct HsParameter {
  double a = 0.0;
  Complex x{};
};

HsParameter solve_hs(double a);

/// diag(e^{i(x s - a/4)}, e^{-i(x s - a/4)}) for s = +1 or -1.
GateMatrix hs_factor(const HsParameter& hs, int s);

/// (1/2) sum_s hs_factor(s) (x) hs_factor(s); equals diag(1, 1, 1, e^{ia}).
GateMatrix hs_reconstruct(const HsParameter& hs);

struct PathFactor {
  int qubit_a = 0;
  int qubit_b = 0;
  HsParameter hs;
};

/// Either a fixed 2x2 matrix or the attachment point of a factor.
struct PathStep {
  int factor = -1;                   // >= 0: factor index
  std::array<Complex, 4> matrix{};  // row-major, when factor < 0
};

/// Product-state timelines W_j(s_1..s_P) of every qubit.
struct PathProgram {
  int n_qubits = 0;
  std::vector<PathFactor> factors;
  std::vector<std::vector<PathStep>> timelines;

  int p_count() const { return static_cast<int>(factors.size()); }
};

/// Rewrites single-qubit gates, CNOT and controlled phases. CNOT becomes
/// H U(pi) H on its target. Throws UnsupportedInstruction for anything else
/// that changes the state (TOFFOLI, SHORBOX, M, CLEAR, SET, noise).
PathProgram compile_to_paths(const Circuit& circuit);

/// Worst-case operation count N M 2^P.
double cost_estimate(const PathProgram& program, std::size_t queries);

/// Byte counter for the allocations of one evaluation.
struct MemoryAccount {
  std::atomic<std::size_t> current{0};
  std::atomic<std::size_t> peak{0};

  void allocate(std::size_t bytes) {
    const std::size_t now = current.fetch_add(bytes) + bytes;
    std::size_t seen = peak.load();
    while (now > seen && !peak.compare_exchange_weak(seen, now)) {
    }
  }
  void release(std::size_t bytes) { current.fetch_sub(bytes); }
};

template <typename T>
struct CountingAllocator {
  using value_type = T;

  explicit CountingAllocator(MemoryAccount* account) : account(account) {}
  template <typename U>
  CountingAllocator(const CountingAllocator<U>& other) : account(other.account) {}

  T* allocate(std::size_t n) {
    account->allocate(n * sizeof(T));
    return std::allocator<T>().allocate(n);
  }
  void deallocate(T* p, std::size_t n) {
    account->release(n * sizeof(T));
    std::allocator<T>().deallocate(p, n);
  }
  template <typename U>
  bool operator==(const CountingAllocator<U>& o) const { return account == o.account; }

  MemoryAccount* account;
};

struct AuxvarStats {
  std::uint64_t configurations = 0;
  std::size_t peak_bytes = 0;
  int chunks = 0;
};

/// Fixed number of configuration ranges; partial sums are merged in range
/// order, so results do not depend on the thread count.
inline constexpr int kAuxvarChunks = 8;

/// Amplitudes <b|psi> of the queried basis states, summing 2^P Gray-code
/// ordered configurations with compensated accumulation.
std::vector<Complex> amplitudes(const PathProgram& program, std::span<const Index> basis_states,
                                AuxvarStats* stats = nullptr, int chunks = kAuxvarChunks);

/// Parses a basis label: "0x..." hex, or a bitstring with qubit N-1 leftmost.
Index parse_basis_label(std::string_view label, int n_qubits);

}  // namespace qcsim
