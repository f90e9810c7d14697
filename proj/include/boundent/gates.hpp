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

#pragma once

#include <array>

#include "boundent/linalg.hpp"

namespace boundent {

// 2x2 single-qubit matrix, row-major: {m00, m01, m10, m11}.
struct Matrix2 {
  std::array<Complex, 4> m{};

  Complex operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

  Matrix2 adjoint() const;
  bool is_unitary(double tolerance = 1e-12) const;
  ComplexOperator to_operator() const;

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(Complex s, const Matrix2& a);
};

namespace gates {
Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 hadamard();
// v . sigma for a real 3-vector.
Matrix2 bloch(double x, double y, double z);
}  // namespace gates

// Applies g to one qubit (1-based) of psi.
Ket apply_local(const Ket& psi, const Matrix2& g, int qubit);

// g acting on one qubit of an n-qubit register, identity elsewhere.
ComplexOperator embed_local(const Matrix2& g, int qubit, int n_qubits);

}  // namespace boundent
