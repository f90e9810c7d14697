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

#include "boundent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "boundent/errors.hpp"
#include "boundent/kernels.hpp"

namespace boundent {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("register size must be 1.." + std::to_string(kMaxQubits) +
                                " qubits, got " + std::to_string(n));
  }
}

void check_same_shape(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------- Ket

Ket::Ket(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
}

Ket::Ket(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubits(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("Ket: expected 2^" + std::to_string(n_qubits) + " amplitudes, got " +
                                std::to_string(amps_.size()));
  }
}

Ket Ket::basis(int n_qubits, std::uint64_t index) {
  Ket k(n_qubits);
  if (index >= k.dim()) throw std::out_of_range("Ket::basis: index out of range");
  k[index] = 1.0;
  return k;
}

double Ket::squared_norm() const { return kernels::dot_conj(amps_, amps_).real(); }

bool Ket::is_normalized(double tolerance) const {
  return std::abs(squared_norm() - 1.0) <= tolerance;
}

Ket Ket::normalized() const {
  const double norm = std::sqrt(squared_norm());
  if (norm == 0.0) throw std::domain_error("Ket::normalized: zero vector");
  Ket out = *this;
  out *= 1.0 / norm;
  return out;
}

Ket& Ket::operator+=(const Ket& other) {
  check_same_shape(dim(), other.dim(), "Ket +=");
  kernels::axpy(1.0, other.amps_, amps_);
  return *this;
}

Ket& Ket::operator-=(const Ket& other) {
  check_same_shape(dim(), other.dim(), "Ket -=");
  kernels::axpy(-1.0, other.amps_, amps_);
  return *this;
}

Ket& Ket::operator*=(Complex factor) {
  for (auto& a : amps_) a *= factor;
  return *this;
}

Complex inner(const Ket& a, const Ket& b) {
  check_same_shape(a.dim(), b.dim(), "inner");
  return kernels::dot_conj(b.amplitudes(), a.amplitudes());
}

// ---------------------------------------------------------------- ComplexOperator

ComplexOperator::ComplexOperator(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  dim_ = std::size_t{1} << n_qubits;
  entries_.assign(dim_ * dim_, Complex{});
}

ComplexOperator::ComplexOperator(int n_qubits, std::vector<Complex> row_major)
    : n_qubits_(n_qubits), entries_(std::move(row_major)) {
  check_qubits(n_qubits);
  dim_ = std::size_t{1} << n_qubits;
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("ComplexOperator: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexOperator ComplexOperator::identity(int n_qubits) {
  ComplexOperator id(n_qubits);
  for (std::size_t i = 0; i < id.dim_; ++i) id(i, i) = 1.0;
  return id;
}

ComplexOperator ComplexOperator::projector(const Ket& psi) {
  ComplexOperator p(psi.n_qubits());
  p.add_projector(psi, 1.0);
  return p;
}

Complex ComplexOperator::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexOperator ComplexOperator::adjoint() const {
  ComplexOperator out(n_qubits_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double ComplexOperator::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

double ComplexOperator::max_abs_entry() const {
  double worst = 0.0;
  for (const auto& z : entries_) worst = std::max(worst, std::abs(z));
  return worst;
}

void ComplexOperator::add_projector(const Ket& psi, double weight) {
  check_same_shape(dim_, psi.dim(), "add_projector");
  const auto amps = psi.amplitudes();
  for (std::size_t r = 0; r < dim_; ++r) {
    if (amps[r] == Complex{}) continue;
    kernels::axpy_conj(weight * amps[r], amps, row(r));
  }
}

void ComplexOperator::add_scaled(const ComplexOperator& other, Complex weight) {
  check_same_shape(dim_, other.dim_, "add_scaled");
  kernels::axpy(weight, other.entries_, entries_);
}

ComplexOperator& ComplexOperator::operator+=(const ComplexOperator& other) {
  add_scaled(other, 1.0);
  return *this;
}

ComplexOperator& ComplexOperator::operator-=(const ComplexOperator& other) {
  add_scaled(other, -1.0);
  return *this;
}

ComplexOperator& ComplexOperator::operator*=(Complex factor) {
  for (auto& z : entries_) z *= factor;
  return *this;
}

Ket ComplexOperator::apply(const Ket& psi) const {
  check_same_shape(dim_, psi.dim(), "apply");
  Ket out(n_qubits_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = kernels::dot(row(r), psi.amplitudes());
  return out;
}

ComplexOperator ComplexOperator::operator*(const ComplexOperator& rhs) const {
  check_same_shape(dim_, rhs.dim_, "operator*");
  ComplexOperator out(n_qubits_);
  for (std::size_t r = 0; r < dim_; ++r) {
    auto out_row = out.row(r);
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a != Complex{}) kernels::axpy(a, rhs.row(k), out_row);
    }
  }
  return out;
}

// ---------------------------------------------------------------- DensityMatrix

namespace {

void check_hermitian_unit_trace(const ComplexOperator& op) {
  if (const double d = op.hermiticity_defect(); d > tol::kHermiticity) {
    std::ostringstream os;
    os << "max |rho - rho^dagger| = " << d << " exceeds " << tol::kHermiticity;
    throw InvariantViolation("hermiticity", os.str());
  }
  const Complex t = op.trace();
  if (std::abs(t - 1.0) > tol::kTrace) {
    std::ostringstream os;
    os.precision(17);
    os << "trace = " << t.real() << " differs from 1 by more than " << tol::kTrace;
    throw InvariantViolation("trace", os.str());
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_operator(ComplexOperator op) {
  check_hermitian_unit_trace(op);
  const auto spectrum = hermitian_spectrum(op);
  if (spectrum.front() < -tol::kPsd) {
    std::ostringstream os;
    os << "minimum eigenvalue " << spectrum.front() << " below " << -tol::kPsd;
    throw InvariantViolation("psd", os.str());
  }
  return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::from_mixture(ComplexOperator op) {
  check_hermitian_unit_trace(op);
  return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
  if (!psi.is_normalized()) {
    throw InvariantViolation("normalization", "pure state requires a normalized ket");
  }
  return DensityMatrix(ComplexOperator::projector(psi));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  ComplexOperator op = ComplexOperator::identity(n_qubits);
  op *= 1.0 / static_cast<double>(op.dim());
  return DensityMatrix(std::move(op));
}

// ---------------------------------------------------------------- Bipartition

Bipartition::Bipartition(int n_qubits, std::uint32_t group_a_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Bipartition: need 2.." + std::to_string(kMaxQubits) + " qubits");
  }
  const std::uint32_t full = (1U << n_qubits) - 1U;
  if ((group_a_qubits & ~full) != 0U) {
    throw std::invalid_argument("Bipartition: qubit index out of range");
  }
  if (group_a_qubits == 0U || group_a_qubits == full) {
    throw std::invalid_argument("Bipartition: both groups must be non-empty");
  }
  if ((group_a_qubits >> (n_qubits - 1)) & 1U) group_a_qubits = full & ~group_a_qubits;
  mask_ = group_a_qubits;
}

Bipartition Bipartition::from_qubits(int n_qubits, std::span<const int> group_a) {
  std::uint32_t mask = 0;
  for (int q : group_a) {
    if (q < 1 || q > n_qubits) {
      throw std::invalid_argument("Bipartition: qubit " + std::to_string(q) + " out of range 1.." +
                                  std::to_string(n_qubits));
    }
    mask |= 1U << (q - 1);
  }
  return Bipartition(n_qubits, mask);
}

Bipartition Bipartition::from_dc_index(int n_qubits, std::uint64_t j) {
  if (n_qubits < 2 || j < 1 || j >= (std::uint64_t{1} << (n_qubits - 1))) {
    throw std::invalid_argument("Bipartition::from_dc_index: j out of range 1..2^(N-1)-1");
  }
  std::uint32_t mask = 0;
  for (int k = 1; k <= n_qubits - 1; ++k) {
    if ((j >> (n_qubits - 1 - k)) & 1U) mask |= 1U << (k - 1);
  }
  return Bipartition(n_qubits, mask);
}

std::vector<Bipartition> Bipartition::all(int n_qubits) {
  std::vector<Bipartition> cuts;
  const std::uint32_t limit = 1U << (n_qubits - 1);
  for (std::uint32_t m = 1; m < limit; ++m) cuts.emplace_back(n_qubits, m);
  return cuts;
}

std::uint32_t Bipartition::group_b_qubits() const noexcept {
  return ((1U << n_qubits_) - 1U) & ~mask_;
}

std::vector<int> Bipartition::group_a() const {
  std::vector<int> out;
  for (int k = 1; k <= n_qubits_; ++k) {
    if (in_group_a(k)) out.push_back(k);
  }
  return out;
}

std::vector<int> Bipartition::group_b() const {
  std::vector<int> out;
  for (int k = 1; k <= n_qubits_; ++k) {
    if (!in_group_a(k)) out.push_back(k);
  }
  return out;
}

std::uint64_t Bipartition::dc_index() const {
  std::uint64_t j = 0;
  for (int k = 1; k <= n_qubits_ - 1; ++k) {
    if (in_group_a(k)) j |= std::uint64_t{1} << (n_qubits_ - 1 - k);
  }
  return j;
}

std::uint64_t Bipartition::index_mask() const {
  std::uint64_t m = 0;
  for (int k = 1; k <= n_qubits_; ++k) {
    if (in_group_a(k)) m |= qubit_bit(n_qubits_, k);
  }
  return m;
}

std::string Bipartition::to_string() const {
  auto join = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  return join(group_a()) + ":" + join(group_b());
}

// ---------------------------------------------------------------- free functions

Ket tensor(const Ket& a, const Ket& b) {
  Ket out(a.n_qubits() + b.n_qubits());
  const std::size_t db = b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == Complex{}) continue;
    kernels::axpy(a[i], b.amplitudes(), out.amplitudes().subspan(i * db, db));
  }
  return out;
}

ComplexOperator tensor(const ComplexOperator& a, const ComplexOperator& b) {
  ComplexOperator out(a.n_qubits() + b.n_qubits());
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  for (std::size_t ra = 0; ra < da; ++ra) {
    for (std::size_t ca = 0; ca < da; ++ca) {
      const Complex s = a(ra, ca);
      if (s == Complex{}) continue;
      for (std::size_t rb = 0; rb < db; ++rb) {
        kernels::axpy(s, b.row(rb), out.row(ra * db + rb).subspan(ca * db, db));
      }
    }
  }
  return out;
}

ComplexOperator partial_transpose(const ComplexOperator& op, std::uint64_t index_mask) {
  ComplexOperator out(op.n_qubits());
  const std::size_t d = op.dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t rs = (r & ~index_mask) | (c & index_mask);
      const std::size_t cs = (c & ~index_mask) | (r & index_mask);
      out(r, c) = op(rs, cs);
    }
  }
  return out;
}

ComplexOperator partial_transpose(const ComplexOperator& op, const Bipartition& cut) {
  check_same_shape(static_cast<std::size_t>(op.n_qubits()),
                   static_cast<std::size_t>(cut.n_qubits()), "partial_transpose");
  return partial_transpose(op, cut.index_mask());
}

ComplexOperator partial_transpose(const DensityMatrix& rho, const Bipartition& cut) {
  return partial_transpose(rho.op(), cut);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  const int n = rho.n_qubits();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate qubit in keep set");
  }
  for (int q : kept) {
    if (q < 1 || q > n) throw std::invalid_argument("partial_trace: qubit out of range");
  }
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());

  // Scatter a compact index over a qubit list into a full basis index.
  auto scatter = [n](std::uint64_t compact, const std::vector<int>& qubits) {
    std::uint64_t full = 0;
    const int m = static_cast<int>(qubits.size());
    for (int i = 0; i < m; ++i) {
      if ((compact >> (m - 1 - i)) & 1U) full |= qubit_bit(n, qubits[static_cast<std::size_t>(i)]);
    }
    return full;
  };

  ComplexOperator out(nk);
  const std::uint64_t dk = std::uint64_t{1} << nk;
  const std::uint64_t dt = std::uint64_t{1} << nt;
  for (std::uint64_t r = 0; r < dk; ++r) {
    const std::uint64_t rf = scatter(r, kept);
    for (std::uint64_t c = 0; c < dk; ++c) {
      const std::uint64_t cf = scatter(c, kept);
      Complex acc{};
      for (std::uint64_t t = 0; t < dt; ++t) {
        const std::uint64_t tf = scatter(t, traced);
        acc += rho(rf | tf, cf | tf);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix::from_mixture(std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  check_same_shape(a.dim(), b.dim(), "trace_distance");
  const auto spectrum = hermitian_spectrum(a.op() - b.op());
  double sum = 0.0;
  for (double e : spectrum) sum += std::abs(e);
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double overlap(const Ket& psi, const DensityMatrix& rho) {
  check_same_shape(psi.dim(), rho.dim(), "overlap");
  if (!psi.is_normalized(1e-10)) {
    throw InvariantViolation("normalization", "overlap requires a normalized ket");
  }
  return inner(psi, rho.op().apply(psi)).real();
}

Complex trace_product_hermitian(const ComplexOperator& a, const ComplexOperator& b) {
  check_same_shape(a.dim(), b.dim(), "trace_product_hermitian");
  // tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) when B = B^dagger.
  return kernels::dot_conj(a.entries(), b.entries());
}

double purity(const DensityMatrix& rho) {
  return kernels::dot_conj(rho.op().entries(), rho.op().entries()).real();
}

int numerical_rank(const DensityMatrix& rho, double threshold) {
  const auto spectrum = hermitian_spectrum(rho.op());
  return static_cast<int>(std::count_if(spectrum.begin(), spectrum.end(),
                                        [threshold](double e) { return e > threshold; }));
}

}  // namespace boundent
