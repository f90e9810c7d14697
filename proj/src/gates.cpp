// Copyright 2026 The boundent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boundent/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace boundent {

Matrix2 Matrix2::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

bool Matrix2::is_unitary(double tolerance) const {
  const Matrix2 prod = adjoint() * (*this);
  return std::abs(prod.m[0] - 1.0) <= tolerance && std::abs(prod.m[1]) <= tolerance &&
         std::abs(prod.m[2]) <= tolerance && std::abs(prod.m[3] - 1.0) <= tolerance;
}

ComplexOperator Matrix2::to_operator() const {
  return ComplexOperator(1, {m[0], m[1], m[2], m[3]});
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

Matrix2 operator*(Complex s, const Matrix2& a) {
  return {{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
}

namespace gates {

Matrix2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
Matrix2 pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }
Matrix2 pauli_y() { return {{0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}}; }
Matrix2 pauli_z() { return {{1.0, 0.0, 0.0, -1.0}}; }

Matrix2 hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h, h, -h}};
}

Matrix2 bloch(double x, double y, double z) {
  return {{z, Complex{x, -y}, Complex{x, y}, -z}};
}

}  // namespace gates

Ket apply_local(const Ket& psi, const Matrix2& g, int qubit) {
  const int n = psi.n_qubits();
  if (qubit < 1 || qubit > n) {
    throw std::out_of_range("apply_local: qubit " + std::to_string(qubit) + " out of range 1.." +
                            std::to_string(n));
  }
  const std::uint64_t bit = qubit_bit(n, qubit);
  Ket out(n);
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    if (i & bit) continue;
    const Complex a0 = psi[i];
    const Complex a1 = psi[i | bit];
    out[i] = g.m[0] * a0 + g.m[1] * a1;
    out[i | bit] = g.m[2] * a0 + g.m[3] * a1;
  }
  return out;
}

ComplexOperator embed_local(const Matrix2& g, int qubit, int n_qubits) {
  if (qubit < 1 || qubit > n_qubits) throw std::out_of_range("embed_local: qubit out of range");
  ComplexOperator out = qubit == 1 ? g.to_operator() : ComplexOperator::identity(1);
  for (int k = 2; k <= n_qubits; ++k) {
    out = tensor(out, k == qubit ? g.to_operator() : ComplexOperator::identity(1));
  }
  return out;
}

}  // namespace boundent
