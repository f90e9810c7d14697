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

#include "boundent/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "boundent/errors.hpp"
#include "boundent/gates.hpp"

namespace boundent {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_unit_interval(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << who << ": x = " << x << " outside [0, 1]";
    throw std::invalid_argument(os.str());
  }
}

Ket product(std::initializer_list<Ket> factors) {
  auto it = factors.begin();
  Ket out = *it++;
  for (; it != factors.end(); ++it) out = tensor(out, *it);
  return out;
}

}  // namespace

Ket plus_state() { return Ket(1, {kInvSqrt2, kInvSqrt2}); }
Ket minus_state() { return Ket(1, {kInvSqrt2, -kInvSqrt2}); }

Ket ghz(int n_qubits, Sign sign) {
  if (n_qubits < 2) throw std::invalid_argument("ghz: N must be >= 2");
  Ket k(n_qubits);
  k[0] = kInvSqrt2;
  k[k.dim() - 1] = sign_value(sign) * kInvSqrt2;
  return k;
}

Ket ghz_like(int n_qubits, std::uint64_t j, Sign sign) {
  if (n_qubits < 2) throw std::invalid_argument("ghz_like: N must be >= 2");
  const std::uint64_t limit = std::uint64_t{1} << (n_qubits - 1);
  if (j >= limit) {
    throw std::invalid_argument("ghz_like: j = " + std::to_string(j) + " outside 1..2^(N-1)-1");
  }
  Ket k(n_qubits);
  const std::uint64_t first = j << 1;  // |j_1 .. j_{N-1} 0>
  const std::uint64_t second = (k.dim() - 1) ^ first;
  k[first] = kInvSqrt2;
  k[second] = sign_value(sign) * kInvSqrt2;
  return k;
}

std::array<Ket, 4> bell_states() {
  return {ghz(2, Sign::plus), ghz(2, Sign::minus), ghz_like(2, 1, Sign::plus),
          ghz_like(2, 1, Sign::minus)};
}

DensityMatrix smolin_bell() {
  ComplexOperator rho(4);
  for (const Ket& b : bell_states()) rho.add_projector(tensor(b, b), 0.25);
  return DensityMatrix::from_mixture(std::move(rho));
}

std::array<Ket, 4> smolin_ghz_components() {
  auto pair = [](std::uint64_t u, std::uint64_t v) {
    Ket k(4);
    k[u] = kInvSqrt2;
    k[v] = kInvSqrt2;
    return k;
  };
  return {pair(0b0000, 0b1111), pair(0b0011, 0b1100), pair(0b0101, 0b1010),
          pair(0b0110, 0b1001)};
}

DensityMatrix smolin_ghz() {
  ComplexOperator rho(4);
  for (const Ket& x : smolin_ghz_components()) rho.add_projector(x, 0.25);
  return DensityMatrix::from_mixture(std::move(rho));
}

// ---------------------------------------------------------------- ABLS

bool ABLSParams::flag_entangled() const { return a * b * c != 1.0; }

double ABLSParams::normalization() const { return 2.0 + a + 1.0 / a + b + 1.0 / b + c + 1.0 / c; }

namespace {

void check_abls(const ABLSParams& p) {
  if (!(p.a > 0.0 && p.b > 0.0 && p.c > 0.0)) {
    std::ostringstream os;
    os << "abls: parameters must be positive (a=" << p.a << ", b=" << p.b << ", c=" << p.c << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

DensityMatrix abls(const ABLSParams& params) {
  check_abls(params);
  const double n = params.normalization();
  ComplexOperator rho(3);
  rho.add_projector(ghz(3, Sign::plus), 2.0 / n);
  const auto diag = [&](std::uint64_t idx, double w) { rho(idx, idx) += w / n; };
  diag(0b001, params.c);
  diag(0b110, 1.0 / params.c);
  diag(0b010, params.b);
  diag(0b101, 1.0 / params.b);
  diag(0b100, params.a);
  diag(0b011, 1.0 / params.a);
  return DensityMatrix::from_mixture(std::move(rho));
}

Ket abls_component(const ABLSParams& params, char which, Sign sign) {
  check_abls(params);
  double v = 0.0;
  std::uint64_t first = 0;
  switch (which) {
    case 'a': v = params.a; first = 0b100; break;
    case 'b': v = params.b; first = 0b010; break;
    case 'c': v = params.c; first = 0b001; break;
    default: throw std::invalid_argument("abls_component: which must be 'a', 'b' or 'c'");
  }
  Ket k(3);
  k[first] = std::sqrt(v / 2.0);
  k[first ^ 0b111] = sign_value(sign) / std::sqrt(2.0 * v);
  return k;
}

DensityMatrix abls_mixture_form(const ABLSParams& params) {
  check_abls(params);
  const double n = params.normalization();
  ComplexOperator rho(3);
  rho.add_projector(ghz(3, Sign::plus), 2.0 / n);
  for (char which : {'a', 'b', 'c'}) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      rho.add_projector(abls_component(params, which, s), 1.0 / n);
    }
  }
  return DensityMatrix::from_mixture(std::move(rho));
}

// ---------------------------------------------------------------- Dur-Cirac

DurCiracSpec::DurCiracSpec(int n_qubits, double lambda0_plus, double lambda0_minus,
                           std::map<std::uint64_t, double> lambdas, double tolerance)
    : n_qubits_(n_qubits),
      lambda0_plus_(lambda0_plus),
      lambda0_minus_(lambda0_minus),
      lambdas_(std::move(lambdas)) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("DurCiracSpec: N must be 2.." + std::to_string(kMaxQubits));
  }
  if (lambda0_plus < 0.0 || lambda0_minus < 0.0) {
    throw std::invalid_argument("DurCiracSpec: lambda0+/- must be non-negative");
  }
  double total = lambda0_plus + lambda0_minus;
  for (auto it = lambdas_.begin(); it != lambdas_.end();) {
    const auto [j, value] = *it;
    if (j < 1 || j > max_index()) {
      throw std::invalid_argument("DurCiracSpec: index j = " + std::to_string(j) +
                                  " outside 1..2^(N-1)-1");
    }
    if (value < 0.0) {
      throw std::invalid_argument("DurCiracSpec: lambda_" + std::to_string(j) + " is negative");
    }
    total += 2.0 * value;
    it = value == 0.0 ? lambdas_.erase(it) : std::next(it);
  }
  if (std::abs(total - 1.0) > tolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "lambda0+ + lambda0- + 2 sum lambda_j = " << total << ", expected 1";
    throw InvariantViolation("normalization", os.str());
  }
}

double DurCiracSpec::lambda(std::uint64_t j) const {
  if (j < 1 || j > max_index()) {
    throw std::invalid_argument("DurCiracSpec::lambda: j out of range");
  }
  const auto it = lambdas_.find(j);
  return it == lambdas_.end() ? 0.0 : it->second;
}

DurCiracSpec DurCiracSpec::canonical() const {
  if (is_canonical()) return *this;
  return DurCiracSpec(n_qubits_, lambda0_minus_, lambda0_plus_, lambdas_, 1e-9);
}

DensityMatrix dur_cirac(const DurCiracSpec& spec) {
  const int n = spec.n_qubits();
  ComplexOperator rho(n);
  if (spec.lambda0_plus() > 0.0) rho.add_projector(ghz(n, Sign::plus), spec.lambda0_plus());
  if (spec.lambda0_minus() > 0.0) rho.add_projector(ghz(n, Sign::minus), spec.lambda0_minus());
  for (const auto& [j, value] : spec.lambdas()) {
    rho.add_projector(ghz_like(n, j, Sign::plus), value);
    rho.add_projector(ghz_like(n, j, Sign::minus), value);
  }
  return DensityMatrix::from_mixture(std::move(rho));
}

// ---------------------------------------------------------------- Dur family

namespace {

void check_dur_args(int n_qubits, double x, const char* who) {
  if (n_qubits < 3 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(std::string(who) + ": N must be 3.." + std::to_string(kMaxQubits));
  }
  require_unit_interval(x, who);
}

}  // namespace

Ket g_state(int n_qubits, int k, Sign sign) {
  if (k < 1 || k > n_qubits) {
    throw std::invalid_argument("g_state: k = " + std::to_string(k) + " outside 1..N");
  }
  Ket g(n_qubits);
  const std::uint64_t u = qubit_bit(n_qubits, k);
  const std::uint64_t v = (g.dim() - 1) ^ u;
  g[u] = kInvSqrt2;
  g[v] = sign_value(sign) * kInvSqrt2;
  return g;
}

DensityMatrix dur_state(int n_qubits, double x) {
  check_dur_args(n_qubits, x, "dur_state");
  ComplexOperator rho(n_qubits);
  rho.add_projector(ghz(n_qubits, Sign::plus), x);
  const double w = (1.0 - x) / (2.0 * n_qubits);
  const std::uint64_t all = rho.dim() - 1;
  for (int k = 1; k <= n_qubits; ++k) {
    const std::uint64_t u = qubit_bit(n_qubits, k);
    rho(u, u) += w;
    rho(all ^ u, all ^ u) += w;
  }
  return DensityMatrix::from_mixture(std::move(rho));
}

DensityMatrix dur_state_g_form(int n_qubits, double x) {
  check_dur_args(n_qubits, x, "dur_state_g_form");
  ComplexOperator rho(n_qubits);
  rho.add_projector(ghz(n_qubits, Sign::plus), x);
  const double w = (1.0 - x) / (2.0 * n_qubits);
  for (int k = 1; k <= n_qubits; ++k) {
    rho.add_projector(g_state(n_qubits, k, Sign::plus), w);
    rho.add_projector(g_state(n_qubits, k, Sign::minus), w);
  }
  return DensityMatrix::from_mixture(std::move(rho));
}

DurCiracSpec dur_spec(int n_qubits, double x) {
  check_dur_args(n_qubits, x, "dur_spec");
  const double w = (1.0 - x) / (2.0 * n_qubits);
  std::map<std::uint64_t, double> lambdas;
  // G_k for k < N has u_k ending in 0: j has a single set bit. G_N pairs
  // |1..10> with |0..01>: j is the all-ones pattern.
  for (int m = 0; m <= n_qubits - 2; ++m) lambdas[std::uint64_t{1} << m] = w;
  lambdas[(std::uint64_t{1} << (n_qubits - 1)) - 1] = w;
  return DurCiracSpec(n_qubits, x, 0.0, std::move(lambdas));
}

// ---------------------------------------------------------------- LLK and Chi

std::vector<std::uint64_t> llk_index_set(int n_qubits) {
  if (n_qubits < 3) throw std::invalid_argument("llk_index_set: N must be >= 3");
  std::vector<std::uint64_t> js;
  for (int m = 0; m <= n_qubits - 3; ++m) js.push_back(std::uint64_t{3} << m);
  return js;
}

DurCiracSpec llk_spec(int n_qubits, double x) {
  if (n_qubits < 4 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("llk_state: N must be 4.." + std::to_string(kMaxQubits));
  }
  require_unit_interval(x, "llk_state");
  const double w = (1.0 - x) / (2.0 * (n_qubits - 2));
  std::map<std::uint64_t, double> lambdas;
  for (std::uint64_t j : llk_index_set(n_qubits)) lambdas[j] = w;
  return DurCiracSpec(n_qubits, x, 0.0, std::move(lambdas));
}

DensityMatrix llk_state(int n_qubits, double x) { return dur_cirac(llk_spec(n_qubits, x)); }

DurCiracSpec chi3_spec(double x) {
  require_unit_interval(x, "chi3");
  const double w = (1.0 - x) / 4.0;
  return DurCiracSpec(3, x, 0.0, {{1, w}, {3, w}});
}

DensityMatrix chi3(double x) { return dur_cirac(chi3_spec(x)); }

// ---------------------------------------------------------------- UPB

std::array<Ket, 4> upb_basis() {
  const Ket zero = Ket::basis(1, 0);
  const Ket one = Ket::basis(1, 1);
  const Ket plus = plus_state();
  const Ket minus = minus_state();
  return {product({zero, zero, zero}), product({one, plus, minus}), product({minus, one, plus}),
          product({plus, minus, one})};
}

DensityMatrix upb_state() {
  ComplexOperator rho = ComplexOperator::identity(3);
  for (const Ket& psi : upb_basis()) rho.add_projector(psi, -1.0);
  rho *= 0.25;
  return DensityMatrix::from_mixture(std::move(rho));
}

std::array<Ket, 4> upb_two_qubit_factors() {
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s12 = 1.0 / std::sqrt(12.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  return {Ket(2, {0.0, s3, -s3, s3}), Ket(2, {3.0 * s12, s12, -s12, s12}),
          Ket(2, {0.0, s6, 2.0 * s6, s6}), Ket(2, {0.0, 2.0 * s6, s6, -s6})};
}

std::array<Ket, 4> bb84_states() {
  return {Ket::basis(1, 0), Ket::basis(1, 1), plus_state(), minus_state()};
}

std::array<Ket, 4> upb_phi_decomposition() {
  const auto chis = upb_two_qubit_factors();
  const auto thirds = bb84_states();
  return {tensor(chis[0], thirds[0]), tensor(chis[1], thirds[1]), tensor(chis[2], thirds[2]),
          tensor(chis[3], thirds[3])};
}

}  // namespace boundent
