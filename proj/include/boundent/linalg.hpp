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

// Dense complex linear algebra over N-qubit registers.
//
// Basis order is big-endian: qubit 1 is the most significant bit of a basis
// index and |0> precedes |1>. Qubits are numbered 1..N in every public
// signature. Operators are stored row-major.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace boundent {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 10;

// Numerical tolerances shared across modules.
namespace tol {
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kNormalization = 1e-12;
// Precondition slack for hermitian_spectrum on computed (not constructed) input.
inline constexpr double kSpectrumHermiticity = 1e-10;
}  // namespace tol

// Index mask of qubit k (1-based) inside an n-qubit basis index.
constexpr std::uint64_t qubit_bit(int n_qubits, int qubit) {
  return std::uint64_t{1} << (n_qubits - qubit);
}

class Ket {
 public:
  explicit Ket(int n_qubits);
  Ket(int n_qubits, std::vector<Complex> amplitudes);

  static Ket basis(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  Complex operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double squared_norm() const;
  bool is_normalized(double tolerance = tol::kNormalization) const;
  Ket normalized() const;

  Ket& operator+=(const Ket& other);
  Ket& operator-=(const Ket& other);
  Ket& operator*=(Complex factor);

  friend Ket operator+(Ket a, const Ket& b) { return a += b; }
  friend Ket operator-(Ket a, const Ket& b) { return a -= b; }
  friend Ket operator*(Complex s, Ket a) { return a *= s; }
  friend Ket operator*(Ket a, Complex s) { return a *= s; }

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

// <a|b>
Complex inner(const Ket& a, const Ket& b);

class ComplexOperator {
 public:
  explicit ComplexOperator(int n_qubits);  // zero operator
  ComplexOperator(int n_qubits, std::vector<Complex> row_major);

  static ComplexOperator identity(int n_qubits);
  static ComplexOperator projector(const Ket& psi);  // |psi><psi|, psi may be unnormalized

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }
  std::span<const Complex> row(std::size_t r) const { return {entries_.data() + r * dim_, dim_}; }
  std::span<Complex> row(std::size_t r) { return {entries_.data() + r * dim_, dim_}; }

  Complex trace() const;
  ComplexOperator adjoint() const;
  // max_{r,c} |A - A^dagger|
  double hermiticity_defect() const;
  double max_abs_entry() const;

  // this += weight * |psi><psi|
  void add_projector(const Ket& psi, double weight);
  // this += weight * other
  void add_scaled(const ComplexOperator& other, Complex weight);

  ComplexOperator& operator+=(const ComplexOperator& other);
  ComplexOperator& operator-=(const ComplexOperator& other);
  ComplexOperator& operator*=(Complex factor);

  friend ComplexOperator operator+(ComplexOperator a, const ComplexOperator& b) { return a += b; }
  friend ComplexOperator operator-(ComplexOperator a, const ComplexOperator& b) { return a -= b; }
  friend ComplexOperator operator*(Complex s, ComplexOperator a) { return a *= s; }

  Ket apply(const Ket& psi) const;
  ComplexOperator operator*(const ComplexOperator& rhs) const;

 private:
  int n_qubits_;
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Hermitian, unit trace, positive semidefinite (within tol::kPsd).
class DensityMatrix {
 public:
  // Full validation, including an eigen-solve for positivity. Throws
  // InvariantViolation naming "hermiticity", "trace" or "psd".
  static DensityMatrix from_operator(ComplexOperator op);

  // Checks hermiticity and trace only. For constructions that are convex
  // mixtures of projectors and therefore positive by construction.
  static DensityMatrix from_mixture(ComplexOperator op);

  static DensityMatrix pure(const Ket& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  const ComplexOperator& op() const noexcept { return op_; }
  int n_qubits() const noexcept { return op_.n_qubits(); }
  std::size_t dim() const noexcept { return op_.dim(); }
  Complex operator()(std::size_t r, std::size_t c) const { return op_(r, c); }

 private:
  explicit DensityMatrix(ComplexOperator op) : op_(std::move(op)) {}
  ComplexOperator op_;
};

// Split of {1..N} into two non-empty groups. Stored canonically: group A
// never contains qubit N.
class Bipartition {
 public:
  // group_a_qubits: bit (k-1) set for qubit k. Complemented if it holds qubit N.
  Bipartition(int n_qubits, std::uint32_t group_a_qubits);

  static Bipartition from_qubits(int n_qubits, std::span<const int> group_a);
  // I_j: qubits k with j_k = 1 where j = j_1 ... j_{N-1} in binary (j_1 most significant).
  static Bipartition from_dc_index(int n_qubits, std::uint64_t j);
  // All 2^{N-1}-1 canonical cuts, ordered by their group-A mask.
  static std::vector<Bipartition> all(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint32_t group_a_qubits() const noexcept { return mask_; }
  std::uint32_t group_b_qubits() const noexcept;
  std::vector<int> group_a() const;
  std::vector<int> group_b() const;
  bool in_group_a(int qubit) const { return (mask_ >> (qubit - 1)) & 1U; }
  bool separates(int k, int l) const { return in_group_a(k) != in_group_a(l); }
  // Inverse of from_dc_index.
  std::uint64_t dc_index() const;
  // Basis-index bits belonging to group A.
  std::uint64_t index_mask() const;

  std::string to_string() const;  // "{1,2}:{3,4}"

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  int n_qubits_;
  std::uint32_t mask_;
};

Ket tensor(const Ket& a, const Ket& b);
ComplexOperator tensor(const ComplexOperator& a, const ComplexOperator& b);

// Transposes the qubits whose basis-index bits are set in index_mask.
ComplexOperator partial_transpose(const ComplexOperator& op, std::uint64_t index_mask);
ComplexOperator partial_transpose(const ComplexOperator& op, const Bipartition& cut);
ComplexOperator partial_transpose(const DensityMatrix& rho, const Bipartition& cut);

// Reduced state on the kept qubits (1-based, any order; result uses ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

// Ascending eigenvalues of a Hermitian operator (cyclic Jacobi).
std::vector<double> hermitian_spectrum(const ComplexOperator& op);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// <psi|rho|psi>; psi must be normalized.
double overlap(const Ket& psi, const DensityMatrix& rho);

// tr(A B) for Hermitian B (A arbitrary).
Complex trace_product_hermitian(const ComplexOperator& a, const ComplexOperator& b);

double purity(const DensityMatrix& rho);

// Number of eigenvalues above threshold.
int numerical_rank(const DensityMatrix& rho, double threshold = 1e-9);

}  // namespace boundent
