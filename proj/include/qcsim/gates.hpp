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
#include <cstdint>

#include "qcsim/circuit.hpp"
#include "qcsim/types.hpp"

namespace qcsim {

/// Dense 2x2, 4x4 or 8x8 matrix, row-major. For multi-qubit gates the basis
/// is |q0, q1[, q2]> in operand order, so the first operand is the most
/// significant matrix index bit (|control,target>).
struct GateMatrix {
  int dim = 2;
  std::array<Complex, 64> entries{};

  Complex& operator()(int row, int col) { return entries[static_cast<std::size_t>(row * dim + col)]; }
  Complex operator()(int row, int col) const {
    return entries[static_cast<std::size_t>(row * dim + col)];
  }

  static GateMatrix identity(int dim);
  static GateMatrix diagonal(std::initializer_list<Complex> diag);
  static GateMatrix from_rows(int dim, std::initializer_list<Complex> values);

  GateMatrix adjoint() const;
  friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);

  bool is_diagonal() const;
  bool is_unitary(double tol = 1e-12) const;
  /// max |a_ij - b_ij|
  static double distance(const GateMatrix& a, const GateMatrix& b);
};

/// e^{+-2 pi i / 2^k}; k = 0, 1, 2, 3 are returned exactly.
Complex phase_from_exponent(std::int64_t k, bool dagger);

/// Rotation angle of a phase exponent, +-2 pi / 2^k.
double angle_from_exponent(std::int64_t k, bool dagger);

/// The defining matrix of a gate instruction. Throws std::invalid_argument
/// for directives and measurements.
GateMatrix gate_matrix(const Instruction& instr);

GateMatrix kron(const GateMatrix& a, const GateMatrix& b);

namespace gates {
GateMatrix hadamard();
GateMatrix pauli_x();
GateMatrix pauli_y();
GateMatrix pauli_z();
}  // namespace gates

}  // namespace qcsim
