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

#include <cmath>
#include <random>
#include <stdexcept>

#include "boundent/diagnostics.hpp"
#include "boundent/errors.hpp"
#include "boundent/random.hpp"

namespace boundent {

namespace {

using Factors = std::vector<std::array<Complex, 2>>;

// w_b = sum over basis states with qubit k = b of psi_i * prod_{m != k} conj(f_m[bit_m]).
std::array<Complex, 2> partial_inner(const Ket& psi, const Factors& f, int k) {
  const int n = psi.n_qubits();
  std::array<Complex, 2> w{};
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    if (psi[i] == Complex{}) continue;
    Complex term = psi[i];
    for (int m = 1; m <= n; ++m) {
      if (m == k) continue;
      const int bit = (i & qubit_bit(n, m)) ? 1 : 0;
      term *= std::conj(f[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(bit)]);
    }
    w[(i & qubit_bit(n, k)) ? 1 : 0] += term;
  }
  return w;
}

double overlap_sq(const Ket& psi, const Factors& f) {
  const auto w = partial_inner(psi, f, 1);
  const Complex ov = std::conj(f[0][0]) * w[0] + std::conj(f[0][1]) * w[1];
  return std::norm(ov);
}

}  // namespace

GeometricMeasureResult geometric_measure_pure(const Ket& psi, int restarts, int iterations,
                                              std::uint64_t seed) {
  if (!psi.is_normalized(1e-10)) {
    throw InvariantViolation("normalization", "geometric_measure_pure requires a normalized ket");
  }
  if (restarts < 1 || iterations < 1) {
    throw std::invalid_argument("geometric_measure_pure: restarts and iterations must be >= 1");
  }
  const int n = psi.n_qubits();
  GeometricMeasureResult best{-1.0, {}, Ket(n), {}};
  Factors best_factors;

  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Factors f(static_cast<std::size_t>(n));
    for (auto& v : f) {
      v = {Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)}};
      const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
      v[0] /= norm;
      v[1] /= norm;
    }
    double value = overlap_sq(psi, f);
    for (int it = 0; it < iterations; ++it) {
      const double before = value;
      for (int k = 1; k <= n; ++k) {
        const auto w = partial_inner(psi, f, k);
        const double norm = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
        if (norm == 0.0) continue;
        f[static_cast<std::size_t>(k - 1)] = {w[0] / norm, w[1] / norm};
      }
      value = std::max(before, overlap_sq(psi, f));
      if (value - before <= 1e-15) break;
    }
    best.restart_values.push_back(value);
    if (value > best.max_overlap_sq) {
      best.max_overlap_sq = value;
      best_factors = f;
    }
  }

  best.max_overlap_sq = std::min(best.max_overlap_sq, 1.0);
  for (const auto& v : best_factors) best.factors.emplace_back(1, std::vector<Complex>{v[0], v[1]});
  Ket witness = best.factors.front();
  for (std::size_t i = 1; i < best.factors.size(); ++i) witness = tensor(witness, best.factors[i]);
  best.witness = std::move(witness);
  return best;
}

}  // namespace boundent
