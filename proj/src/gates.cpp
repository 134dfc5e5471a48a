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

#include "qcsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcsim {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};
}  // namespace

GateMatrix GateMatrix::identity(int dim) {
  GateMatrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

GateMatrix GateMatrix::diagonal(std::initializer_list<Complex> diag) {
  GateMatrix m;
  m.dim = static_cast<int>(diag.size());
  int i = 0;
  for (const Complex& v : diag) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

GateMatrix GateMatrix::from_rows(int dim, std::initializer_list<Complex> values) {
  if (values.size() != static_cast<std::size_t>(dim * dim)) {
    throw std::invalid_argument("GateMatrix::from_rows: wrong entry count");
  }
  GateMatrix m;
  m.dim = dim;
  std::size_t i = 0;
  for (const Complex& v : values) m.entries[i++] = v;
  return m;
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix m;
  m.dim = dim;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = std::conj((*this)(c, r));
  }
  return m;
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("GateMatrix: dimension mismatch");
  GateMatrix m;
  m.dim = a.dim;
  for (int r = 0; r < a.dim; ++r) {
    for (int c = 0; c < a.dim; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < a.dim; ++k) sum += a(r, k) * b(k, c);
      m(r, c) = sum;
    }
  }
  return m;
}

bool GateMatrix::is_diagonal() const {
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (r != c && (*this)(r, c) != Complex(0.0)) return false;
    }
  }
  return true;
}

bool GateMatrix::is_unitary(double tol) const {
  return distance(adjoint() * (*this), identity(dim)) <= tol;
}

double GateMatrix::distance(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("GateMatrix: dimension mismatch");
  double worst = 0.0;
  for (int i = 0; i < a.dim * a.dim; ++i) {
    worst = std::max(worst, std::abs(a.entries[static_cast<std::size_t>(i)] -
                                     b.entries[static_cast<std::size_t>(i)]));
  }
  return worst;
}

GateMatrix kron(const GateMatrix& a, const GateMatrix& b) {
  GateMatrix m;
  m.dim = a.dim * b.dim;
  if (m.dim > 8) throw std::invalid_argument("kron: result larger than 8x8");
  for (int ar = 0; ar < a.dim; ++ar) {
    for (int ac = 0; ac < a.dim; ++ac) {
      for (int br = 0; br < b.dim; ++br) {
        for (int bc = 0; bc < b.dim; ++bc) {
          m(ar * b.dim + br, ac * b.dim + bc) = a(ar, ac) * b(br, bc);
        }
      }
    }
  }
  return m;
}

double angle_from_exponent(std::int64_t k, bool dagger) {
  const double angle = std::ldexp(2.0 * std::numbers::pi, -static_cast<int>(k));
  return dagger ? -angle : angle;
}

Complex phase_from_exponent(std::int64_t k, bool dagger) {
  Complex z;
  switch (k) {
    case 0:
      z = 1.0;
      break;
    case 1:
      z = -1.0;
      break;
    case 2:
      z = kI;
      break;
    case 3:
      z = Complex(kInvSqrt2, kInvSqrt2);
      break;
    default:
      z = std::polar(1.0, angle_from_exponent(k, false));
      break;
  }
  return dagger ? std::conj(z) : z;
}

namespace gates {
GateMatrix hadamard() {
  return GateMatrix::from_rows(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
}
GateMatrix pauli_x() { return GateMatrix::from_rows(2, {0.0, 1.0, 1.0, 0.0}); }
GateMatrix pauli_y() { return GateMatrix::from_rows(2, {0.0, -kI, kI, 0.0}); }
GateMatrix pauli_z() { return GateMatrix::diagonal({1.0, -1.0}); }
}  // namespace gates

GateMatrix gate_matrix(const Instruction& instr) {
  const double s = kInvSqrt2;
  switch (instr.opcode) {
    case Opcode::kI:
      return GateMatrix::identity(2);
    case Opcode::kH:
      return gates::hadamard();
    case Opcode::kX:
      return gates::pauli_x();
    case Opcode::kY:
      return gates::pauli_y();
    case Opcode::kZ:
      return gates::pauli_z();
    case Opcode::kS:
      return GateMatrix::diagonal({1.0, kI});
    case Opcode::kSDag:
      return GateMatrix::diagonal({1.0, -kI});
    case Opcode::kT:
      return GateMatrix::diagonal({1.0, Complex(s, s)});
    case Opcode::kTDag:
      return GateMatrix::diagonal({1.0, Complex(s, -s)});
    case Opcode::kU1:
      return GateMatrix::diagonal({1.0, std::polar(1.0, instr.angles.at(0))});
    case Opcode::kU2: {
      const double phi = instr.angles.at(0);
      const double lambda = instr.angles.at(1);
      return GateMatrix::from_rows(2, {s, -std::polar(s, lambda), std::polar(s, phi),
                                       std::polar(s, phi + lambda)});
    }
    case Opcode::kU3: {
      const double c = std::cos(instr.angles.at(0) / 2.0);
      const double sn = std::sin(instr.angles.at(0) / 2.0);
      const double phi = instr.angles.at(1);
      const double lambda = instr.angles.at(2);
      return GateMatrix::from_rows(2, {c, -std::polar(sn, lambda), std::polar(sn, phi),
                                       std::polar(c, phi + lambda)});
    }
    case Opcode::kPlusX:
      return GateMatrix::from_rows(2, {s, Complex(0, s), Complex(0, s), s});
    case Opcode::kMinusX:
      return GateMatrix::from_rows(2, {s, Complex(0, -s), Complex(0, -s), s});
    case Opcode::kPlusY:
      return GateMatrix::from_rows(2, {s, s, -s, s});
    case Opcode::kMinusY:
      return GateMatrix::from_rows(2, {s, -s, s, s});
    case Opcode::kR:
    case Opcode::kRDag:
      return GateMatrix::diagonal(
          {1.0, phase_from_exponent(instr.ints.at(0), instr.opcode == Opcode::kRDag)});
    case Opcode::kCnot:
      return GateMatrix::from_rows(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    case Opcode::kCPhase:
    case Opcode::kCPhaseDag:
      return GateMatrix::diagonal(
          {1.0, 1.0, 1.0,
           phase_from_exponent(instr.ints.at(0), instr.opcode == Opcode::kCPhaseDag)});
    case Opcode::kToffoli: {
      GateMatrix m = GateMatrix::identity(8);
      m(6, 6) = 0.0;
      m(7, 7) = 0.0;
      m(6, 7) = 1.0;
      m(7, 6) = 1.0;
      return m;
    }
    default:
      throw std::invalid_argument("gate_matrix: " + std::string(mnemonic(instr.opcode)) +
                                  " is not a gate");
  }
}

}  // namespace qcsim
