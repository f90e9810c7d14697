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

// Cyclic Jacobi eigenvalue sweep for dense Hermitian matrices.
//
// Each rotation J = D R combines the phase D = diag(1, e^{-i theta}) that
// makes the (p,q) block real with the classic real rotation R. Only the
// spectrum is needed, so after rotating rows p and q the columns are restored
// from Hermitian symmetry instead of a strided column update.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "boundent/errors.hpp"
#include "boundent/kernels.hpp"
#include "boundent/linalg.hpp"

namespace boundent {

namespace {

constexpr double kOffTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<Complex>& a, std::size_t d) {
  double sum = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r + 1; c < d; ++c) sum += std::norm(a[r * d + c]);
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

std::vector<double> hermitian_spectrum(const ComplexOperator& op) {
  const std::size_t d = op.dim();
  const double scale = std::max(1.0, op.max_abs_entry());
  if (const double defect = op.hermiticity_defect(); defect > tol::kSpectrumHermiticity * scale) {
    std::ostringstream os;
    os << "hermitian_spectrum: input is not Hermitian (defect " << defect << ")";
    throw InvariantViolation("hermiticity", os.str());
  }

  std::vector<Complex> a(op.entries().begin(), op.entries().end());
  // Symmetrize so the row/column bookkeeping below is exact.
  for (std::size_t r = 0; r < d; ++r) {
    a[r * d + r] = a[r * d + r].real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (a[r * d + c] + std::conj(a[c * d + r]));
      a[r * d + c] = avg;
      a[c * d + r] = std::conj(avg);
    }
  }

  const double target = kOffTolerance * scale;
  const double skip = 0.1 * target / static_cast<double>(std::max<std::size_t>(d, 1));
  const auto& k = kernels::active_kernels();

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, d) <= target) break;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex beta = a[p * d + q];
        const double mag = std::abs(beta);
        if (mag <= skip) continue;

        const double alpha = a[p * d + p].real();
        const double gamma = a[q * d + q].real();
        const Complex phase = beta / mag;  // e^{i theta}
        const double tau = (gamma - alpha) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Complex* row_p = a.data() + p * d;
        Complex* row_q = a.data() + q * d;
        k.rotate_pair(row_p, row_q, d, c, -s * phase, s, c * phase);

        for (std::size_t i = 0; i < d; ++i) {
          if (i == p || i == q) continue;
          a[i * d + p] = std::conj(row_p[i]);
          a[i * d + q] = std::conj(row_q[i]);
        }
        row_p[p] = alpha - t * mag;
        row_q[q] = gamma + t * mag;
        row_p[q] = 0.0;
        row_q[p] = 0.0;
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a, d) > target) {
    throw std::runtime_error("hermitian_spectrum: Jacobi sweeps did not converge");
  }

  std::vector<double> eig(d);
  for (std::size_t i = 0; i < d; ++i) eig[i] = a[i * d + i].real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace boundent
