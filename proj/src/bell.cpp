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

#include "boundent/bell.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "boundent/random.hpp"

namespace boundent {

using Vec3 = std::array<double, 3>;

std::array<double, 3> BlochAngles::vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

BlochAngles BlochAngles::from_vector(const std::array<double, 3>& v) {
  const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (r == 0.0) throw std::invalid_argument("BlochAngles::from_vector: zero vector");
  return {std::acos(std::clamp(v[2] / r, -1.0, 1.0)), std::atan2(v[1], v[0])};
}

namespace {

Matrix2 observable(const Vec3& v) { return gates::bloch(v[0], v[1], v[2]); }

Vec3 add(const Vec3& a, const Vec3& b, double sign) {
  return {a[0] + sign * b[0], a[1] + sign * b[1], a[2] + sign * b[2]};
}

void check_parties(int n) {
  if (n < 2) throw std::invalid_argument("Mermin-Klyshko operator needs N >= 2, got " + std::to_string(n));
}

// W has shape [2^m] x [3^r] (s-prefix, remaining Pauli axes in party order).
// Contracts remaining axis `pos` with both settings of one party; the new s bit
// is appended as least significant.
std::vector<double> contract_axis(const std::vector<double>& w, std::size_t prefix, int remaining,
                                  int pos, const Vec3& v0, const Vec3& v1) {
  std::size_t lo = 1;
  for (int i = pos + 1; i < remaining; ++i) lo *= 3;
  std::size_t hi = 1;
  for (int i = 0; i < pos; ++i) hi *= 3;
  const std::size_t block = hi * 3 * lo;
  const std::size_t out_block = hi * lo;
  std::vector<double> out(prefix * 2 * out_block, 0.0);
  for (std::size_t s = 0; s < prefix; ++s) {
    const double* src = w.data() + s * block;
    double* dst0 = out.data() + (2 * s) * out_block;
    double* dst1 = out.data() + (2 * s + 1) * out_block;
    for (std::size_t h = 0; h < hi; ++h) {
      for (std::size_t l = 0; l < lo; ++l) {
        const double x = src[(h * 3 + 0) * lo + l];
        const double y = src[(h * 3 + 1) * lo + l];
        const double z = src[(h * 3 + 2) * lo + l];
        dst0[h * lo + l] = x * v0[0] + y * v0[1] + z * v0[2];
        dst1[h * lo + l] = x * v1[0] + y * v1[1] + z * v1[2];
      }
    }
  }
  return out;
}

struct PartyVectors {
  Vec3 a;
  Vec3 a_prime;
};

double tensor_value(const std::vector<double>& tensor, const std::vector<double>& coeffs,
                    const std::vector<PartyVectors>& parties) {
  const int n = static_cast<int>(parties.size());
  std::vector<double> w = tensor;
  std::size_t prefix = 1;
  for (int k = 0; k < n; ++k) {
    w = contract_axis(w, prefix, n - k, 0, parties[static_cast<std::size_t>(k)].a,
                      parties[static_cast<std::size_t>(k)].a_prime);
    prefix *= 2;
  }
  double value = 0.0;
  for (std::size_t s = 0; s < w.size(); ++s) value += coeffs[s] * w[s];
  return value;
}

// Linear forms C, D with <B_N> = a_k . C + a'_k . D.
std::pair<Vec3, Vec3> party_forms(const std::vector<double>& tensor, const std::vector<double>& coeffs,
                                  const std::vector<PartyVectors>& parties, int k) {
  const int n = static_cast<int>(parties.size());
  std::vector<double> w = tensor;
  std::size_t prefix = 1;
  int remaining = n;
  for (int j = 0; j < n; ++j) {
    if (j == k) continue;
    w = contract_axis(w, prefix, remaining, j < k ? 0 : 1, parties[static_cast<std::size_t>(j)].a,
                      parties[static_cast<std::size_t>(j)].a_prime);
    prefix *= 2;
    --remaining;
  }
  const int low_bits = n - 1 - k;  // parties after k
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
  Vec3 c{};
  Vec3 d{};
  for (std::size_t sp = 0; sp < prefix; ++sp) {
    const std::size_t base = ((sp >> low_bits) << (low_bits + 1)) | (sp & low_mask);
    const double f0 = coeffs[base];
    const double f1 = coeffs[base | (std::size_t{1} << low_bits)];
    for (int m = 0; m < 3; ++m) {
      c[static_cast<std::size_t>(m)] += f0 * w[sp * 3 + static_cast<std::size_t>(m)];
      d[static_cast<std::size_t>(m)] += f1 * w[sp * 3 + static_cast<std::size_t>(m)];
    }
  }
  return {c, d};
}

void align(Vec3& v, const Vec3& target) {
  const double r = std::sqrt(target[0] * target[0] + target[1] * target[1] + target[2] * target[2]);
  if (r == 0.0) return;
  v = {target[0] / r, target[1] / r, target[2] / r};
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> cosine(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double z = cosine(rng);
  const double p = angle(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(p), s * std::sin(p), z};
}

}  // namespace

ComplexOperator mk_operator(const MeasurementSettings& settings) {
  const int n = settings.n_qubits();
  check_parties(n);
  const auto& first = settings.parties.front();
  ComplexOperator b = observable(first.a.vector()).to_operator();
  ComplexOperator bp = observable(first.a_prime.vector()).to_operator();
  for (int k = 1; k < n; ++k) {
    const Vec3 a = settings.parties[static_cast<std::size_t>(k)].a.vector();
    const Vec3 ap = settings.parties[static_cast<std::size_t>(k)].a_prime.vector();
    const ComplexOperator sum = observable(add(a, ap, 1.0)).to_operator();
    const ComplexOperator diff = observable(add(a, ap, -1.0)).to_operator();
    ComplexOperator next = tensor(b, sum) + tensor(bp, diff);
    ComplexOperator next_p = tensor(bp, sum) - tensor(b, diff);
    next *= 0.5;
    next_p *= 0.5;
    b = std::move(next);
    bp = std::move(next_p);
  }
  return b;
}

double mk_value(const DensityMatrix& rho, const MeasurementSettings& settings) {
  if (rho.n_qubits() != settings.n_qubits()) {
    throw std::invalid_argument("mk_value: state has " + std::to_string(rho.n_qubits()) +
                                " qubits, settings have " + std::to_string(settings.n_qubits()));
  }
  return trace_product_hermitian(rho.op(), mk_operator(settings)).real();
}

std::vector<double> mk_coefficients(int n_qubits) {
  check_parties(n_qubits);
  std::vector<double> f{1.0, 0.0};
  std::vector<double> g{0.0, 1.0};
  for (int n = 2; n <= n_qubits; ++n) {
    std::vector<double> fn(f.size() * 2);
    std::vector<double> gn(g.size() * 2);
    for (std::size_t s = 0; s < f.size(); ++s) {
      fn[2 * s] = 0.5 * (f[s] + g[s]);
      fn[2 * s + 1] = 0.5 * (f[s] - g[s]);
      gn[2 * s] = 0.5 * (g[s] - f[s]);
      gn[2 * s + 1] = 0.5 * (g[s] + f[s]);
    }
    f = std::move(fn);
    g = std::move(gn);
  }
  return f;
}

std::vector<double> correlation_tensor(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  std::size_t count = 1;
  for (int k = 0; k < n; ++k) count *= 3;
  std::vector<double> t(count);
  for (std::size_t mu = 0; mu < count; ++mu) {
    // Decode mu into flip and phase masks; party 1 is the leading digit.
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    int ny = 0;
    std::size_t rest = mu;
    for (int k = n; k >= 1; --k) {
      const auto digit = rest % 3;
      rest /= 3;
      const std::uint64_t bit = qubit_bit(n, k);
      if (digit == 0 || digit == 1) xmask |= bit;
      if (digit == 1 || digit == 2) zmask |= bit;
      if (digit == 1) ++ny;
    }
    // tr(rho P) = i^{ny} sum_c (-1)^{|c & z|} rho[c, c ^ x]
    Complex acc{};
    for (std::uint64_t c = 0; c < rho.dim(); ++c) {
      const Complex e = rho(c, c ^ xmask);
      acc += (std::popcount(c & zmask) & 1) ? -e : e;
    }
    static constexpr std::array<Complex, 4> kIPow{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                                  Complex{0, -1}};
    t[mu] = (kIPow[static_cast<std::size_t>(ny % 4)] * acc).real();
  }
  return t;
}

double mk_value_from_tensor(const std::vector<double>& tensor, const MeasurementSettings& settings) {
  const int n = settings.n_qubits();
  check_parties(n);
  std::vector<PartyVectors> parties;
  for (const auto& p : settings.parties) parties.push_back({p.a.vector(), p.a_prime.vector()});
  return tensor_value(tensor, mk_coefficients(n), parties);
}

MkOptimizeResult mk_optimize(const DensityMatrix& rho, int restarts, int iterations,
                             std::uint64_t seed) {
  const int n = rho.n_qubits();
  check_parties(n);
  if (n > kMaxBellQubits) {
    throw std::invalid_argument("mk_optimize: register of " + std::to_string(n) +
                                " qubits exceeds the limit of " + std::to_string(kMaxBellQubits));
  }
  if (restarts < 1 || iterations < 1) {
    throw std::invalid_argument("mk_optimize: restarts and iterations must be >= 1");
  }
  const std::vector<double> tensor = correlation_tensor(rho);
  const std::vector<double> coeffs = mk_coefficients(n);

  MkOptimizeResult result;
  std::vector<PartyVectors> best_parties;
  double best = -std::numeric_limits<double>::infinity();

  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<PartyVectors> parties(static_cast<std::size_t>(n));
    for (auto& p : parties) {
      p.a = random_unit(rng);
      p.a_prime = random_unit(rng);
    }
    MkRestart run;
    run.initial_value = tensor_value(tensor, coeffs, parties);
    double current = run.initial_value;
    std::vector<PartyVectors> kept = parties;
    for (int it = 0; it < iterations; ++it) {
      for (int k = 0; k < n; ++k) {
        const auto [c, d] = party_forms(tensor, coeffs, parties, k);
        align(parties[static_cast<std::size_t>(k)].a, c);
        align(parties[static_cast<std::size_t>(k)].a_prime, d);
      }
      const double value = tensor_value(tensor, coeffs, parties);
      const double gain = value - current;
      if (value > current) {
        current = value;
        kept = parties;
      }
      run.trajectory.push_back(current);
      if (gain < 1e-14) break;
    }
    run.final_value = current;
    if (current > best) {
      best = current;
      best_parties = kept;
      result.best_restart = r;
    }
    result.restarts.push_back(std::move(run));
  }

  for (const auto& p : best_parties) {
    result.settings.parties.push_back({BlochAngles::from_vector(p.a), BlochAngles::from_vector(p.a_prime)});
  }
  result.best_value = mk_value(rho, result.settings);
  return result;
}

}  // namespace boundent
