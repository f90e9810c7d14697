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

// Unextendibility of a set of product kets.
//
// A product state |a_1>...|a_n> is orthogonal to a member iff at least one
// local factor is orthogonal. So an orthogonal product state exists iff the
// members can be assigned to parties such that, on every party, the local
// factors of its assigned members leave a non-trivial orthogonal complement.
// For qubits that means the assigned factors are pairwise parallel.

#include <cmath>
#include <stdexcept>

#include "boundent/diagnostics.hpp"

namespace boundent {

namespace {

// Reduced 2x2 state of one qubit: {r00, r01, r10, r11}.
std::array<Complex, 4> single_qubit_reduction(const Ket& psi, int qubit) {
  const std::uint64_t bit = qubit_bit(psi.n_qubits(), qubit);
  std::array<Complex, 4> r{};
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    if (i & bit) continue;
    const Complex a0 = psi[i];
    const Complex a1 = psi[i | bit];
    r[0] += a0 * std::conj(a0);
    r[1] += a0 * std::conj(a1);
    r[2] += a1 * std::conj(a0);
    r[3] += a1 * std::conj(a1);
  }
  return r;
}

bool parallel(const Ket& u, const Ket& v) { return std::abs(std::abs(inner(u, v)) - 1.0) <= 1e-10; }

Ket orthogonal_qubit(const Ket& v) { return Ket(1, {-std::conj(v[1]), std::conj(v[0])}); }

}  // namespace

std::optional<std::vector<Ket>> product_factors(const Ket& psi, double tolerance) {
  const Ket unit = psi.normalized();
  std::vector<Ket> factors;
  for (int q = 1; q <= unit.n_qubits(); ++q) {
    const auto r = single_qubit_reduction(unit, q);
    const double purity = std::norm(r[0]) + std::norm(r[1]) + std::norm(r[2]) + std::norm(r[3]);
    if (std::abs(purity - 1.0) > tolerance) return std::nullopt;
    // rho = |v><v|: a column divided by the square root of its diagonal entry is v up to phase.
    const bool use_first = r[0].real() >= r[3].real();
    const double d = std::sqrt(use_first ? r[0].real() : r[3].real());
    factors.push_back(use_first ? Ket(1, {r[0] / d, r[2] / d}) : Ket(1, {r[1] / d, r[3] / d}));
  }
  Ket rebuilt = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) rebuilt = tensor(rebuilt, factors[i]);
  if (std::abs(std::abs(inner(rebuilt, unit)) - 1.0) > tolerance) return std::nullopt;
  return factors;
}

UpbCheck upb_unextendible(std::span<const Ket> basis) {
  if (basis.empty()) throw std::invalid_argument("upb_unextendible: empty set");
  const int n = basis.front().n_qubits();
  UpbCheck result;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].n_qubits() != n) {
      throw std::invalid_argument("upb_unextendible: members have different register sizes");
    }
    auto f = product_factors(basis[i]);
    if (!f) {
      throw std::invalid_argument("upb_unextendible: member " + std::to_string(i + 1) +
                                  " is not a product state");
    }
    result.factors.push_back(std::move(*f));
  }

  const std::size_t m = basis.size();
  // assignment[i] = party (0-based) that member i is made orthogonal on.
  std::vector<int> assignment(m, 0);
  while (true) {
    std::vector<const Ket*> anchor(static_cast<std::size_t>(n), nullptr);
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      const auto p = static_cast<std::size_t>(assignment[i]);
      const Ket& local = result.factors[i][p];
      if (anchor[p] == nullptr) {
        anchor[p] = &local;
      } else if (!parallel(*anchor[p], local)) {
        feasible = false;
      }
    }
    if (feasible) {
      Ket witness = anchor[0] ? orthogonal_qubit(*anchor[0]) : Ket::basis(1, 0);
      for (std::size_t p = 1; p < anchor.size(); ++p) {
        witness = tensor(witness, anchor[p] ? orthogonal_qubit(*anchor[p]) : Ket::basis(1, 0));
      }
      result.unextendible = false;
      result.witness = std::move(witness);
      return result;
    }
    std::size_t pos = 0;
    while (pos < m && ++assignment[pos] == n) assignment[pos++] = 0;
    if (pos == m) break;
  }
  result.unextendible = true;
  return result;
}

}  // namespace boundent
