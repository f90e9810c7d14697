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

#include "boundent/optics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "boundent/errors.hpp"
#include "boundent/random.hpp"

namespace boundent {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_photon(int photon, int n_qubits) {
  if (photon < 1 || photon > n_qubits) {
    throw std::out_of_range("photon index " + std::to_string(photon) + " outside 1.." +
                            std::to_string(n_qubits));
  }
}

void check_transmissions(double t_h, double t_v) {
  if (!(t_h > 0.0 && t_h <= 1.0 && t_v > 0.0 && t_v <= 1.0)) {
    std::ostringstream os;
    os << "partial polarizer transmissions must lie in (0, 1], got T_H=" << t_h << ", T_V=" << t_v;
    throw InvariantViolation("transmission", os.str());
  }
}

// Larger transmission 1, T_V / T_H = ratio.
std::pair<double, double> polarizer_for_ratio(double ratio) {
  return ratio >= 1.0 ? std::pair{1.0 / ratio, 1.0} : std::pair{1.0, ratio};
}

}  // namespace

Ket emit(const Source& source) {
  return std::visit(
      Overloaded{
          [](const GhzSource& s) { return ghz(s.n_qubits, s.sign); },
          [](const TwoPhotonSchmidtSource& s) {
            if (std::abs(s.alpha * s.alpha + s.beta * s.beta - 1.0) > tol::kNormalization) {
              throw InvariantViolation("normalization", "Schmidt amplitudes need alpha^2 + beta^2 = 1");
            }
            return Ket(2, {s.alpha, 0.0, 0.0, s.beta});
          },
          [](const SinglePhotonSource& s) {
            if (s.state.n_qubits() != 1 || !s.state.is_normalized(1e-10)) {
              throw InvariantViolation("normalization", "single-photon source needs a normalized qubit");
            }
            return s.state;
          },
      },
      source);
}

FilterResult apply_filter(const Ket& psi, int photon, double t_h, double t_v) {
  check_photon(photon, psi.n_qubits());
  check_transmissions(t_h, t_v);
  if (!psi.is_normalized(1e-10)) {
    throw InvariantViolation("normalization", "apply_filter needs a normalized input");
  }
  const std::uint64_t bit = qubit_bit(psi.n_qubits(), photon);
  const double sh = std::sqrt(t_h);
  const double sv = std::sqrt(t_v);
  Ket out = psi;
  for (std::uint64_t i = 0; i < out.dim(); ++i) out[i] *= (i & bit) ? sv : sh;
  return {out, out.squared_norm()};
}

BranchOutput run_branch(const Branch& branch) {
  if (!(branch.p >= 0.0)) throw std::invalid_argument("branch probability must be >= 0");
  Ket psi = emit(branch.source);
  for (const Ket& extra : branch.extra_photons) {
    if (extra.n_qubits() != 1 || !extra.is_normalized(1e-10)) {
      throw InvariantViolation("normalization", "extra photons must be normalized single qubits");
    }
    psi = tensor(psi, extra);
  }
  double success = 1.0;
  for (const Element& e : branch.elements) {
    if (const auto* u = std::get_if<LocalUnitary>(&e)) {
      check_photon(u->photon, psi.n_qubits());
      if (!u->unitary.is_unitary(1e-12)) {
        throw InvariantViolation("unitarity", "element on photon " + std::to_string(u->photon) +
                                                  " is not unitary");
      }
      psi = apply_local(psi, u->unitary, u->photon);
    } else {
      const auto& f = std::get<PartialPolarizer>(e);
      auto [out, s] = apply_filter(psi, f.photon, f.t_h, f.t_v);
      if (s == 0.0) return {ComplexOperator(psi.n_qubits()), 0.0, 0.0};
      success *= s;
      psi = out.normalized();
    }
  }
  ComplexOperator proj(psi.n_qubits());
  proj.add_projector(psi, success);
  return {std::move(proj), success, branch.p * success};
}

DensityMatrix assemble_mixture(const MixingScheme& scheme) {
  if (scheme.branches.empty()) throw InvariantViolation("weight", "scheme has no branches");
  double p_sum = 0.0;
  for (const auto& b : scheme.branches) p_sum += b.p;
  if (std::abs(p_sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "branch probabilities sum to " << p_sum;
    throw InvariantViolation("probability_sum", os.str());
  }
  ComplexOperator acc(scheme.n_qubits);
  double total = 0.0;
  for (std::size_t i = 0; i < scheme.branches.size(); ++i) {
    const auto& b = scheme.branches[i];
    if (b.p == 0.0) continue;
    BranchOutput out = run_branch(b);
    if (out.projector.n_qubits() != scheme.n_qubits) {
      throw InvariantViolation("dimension", "branch " + std::to_string(i + 1) + " emits " +
                                                std::to_string(out.projector.n_qubits()) +
                                                " photons, scheme declares " +
                                                std::to_string(scheme.n_qubits));
    }
    acc.add_scaled(out.projector, b.p);
    total += out.weight;
  }
  if (total <= 0.0) throw InvariantViolation("weight", "total post-selected weight is zero");
  acc *= 1.0 / total;
  return DensityMatrix::from_mixture(std::move(acc));
}

// ---------------------------------------------------------------- builtin schemes

MixingScheme scheme_abls(double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) {
    throw std::invalid_argument("scheme_abls: parameters must be positive");
  }
  const std::array<double, 3> params{a, b, c};
  std::array<std::pair<double, double>, 3> filters{};
  // p_GHZ = 2t, p_x = x t / T_V^x per sign, 2t + 2 sum_x p_x = 1.
  double denom = 2.0;
  for (std::size_t i = 0; i < 3; ++i) {
    filters[i] = polarizer_for_ratio(params[i] * params[i]);
    denom += 2.0 * params[i] / filters[i].second;
  }
  const double t = 1.0 / denom;

  MixingScheme scheme{3, {}};
  scheme.branches.push_back({2.0 * t, GhzSource{3, Sign::plus}, {}, {}});
  const Matrix2 flip = gates::pauli_x();
  const Matrix2 flip_phase = gates::pauli_x() * gates::pauli_z();
  for (std::size_t i = 0; i < 3; ++i) {
    const int photon = static_cast<int>(i) + 1;
    const double p = params[i] * t / filters[i].second;
    const PartialPolarizer pol{photon, filters[i].first, filters[i].second};
    scheme.branches.push_back({p, GhzSource{3, Sign::plus}, {LocalUnitary{photon, flip}, pol}, {}});
    scheme.branches.push_back({p, GhzSource{3, Sign::plus}, {LocalUnitary{photon, flip_phase}, pol}, {}});
  }
  return scheme;
}

MixingScheme scheme_ghz_mixture(int n_qubits, const std::vector<GhzLikeTerm>& terms) {
  MixingScheme scheme{n_qubits, {}};
  const std::uint64_t max_j = (std::uint64_t{1} << (n_qubits - 1)) - 1;
  for (const auto& term : terms) {
    if (term.j > max_j) throw std::out_of_range("GHZ-like index " + std::to_string(term.j) + " out of range");
    if (term.p == 0.0) continue;
    Branch b{term.p, GhzSource{n_qubits, Sign::plus}, {}, {}};
    if (term.sign == Sign::minus) b.elements.push_back(LocalUnitary{1, gates::pauli_z()});
    for (int k = 1; k < n_qubits; ++k) {
      if ((term.j >> (n_qubits - 1 - k)) & 1U) b.elements.push_back(LocalUnitary{k, gates::pauli_x()});
    }
    scheme.branches.push_back(std::move(b));
  }
  return scheme;
}

MixingScheme scheme_dur_cirac(const DurCiracSpec& spec) {
  std::vector<GhzLikeTerm> terms{{0, Sign::plus, spec.lambda0_plus()},
                                 {0, Sign::minus, spec.lambda0_minus()}};
  for (const auto& [j, l] : spec.lambdas()) {
    terms.push_back({j, Sign::plus, l});
    terms.push_back({j, Sign::minus, l});
  }
  return scheme_ghz_mixture(spec.n_qubits(), terms);
}

MixingScheme scheme_smolin() {
  return scheme_ghz_mixture(4, {{0, Sign::plus, 0.25}, {6, Sign::plus, 0.25}, {5, Sign::plus, 0.25},
                                {3, Sign::plus, 0.25}});
}

MixingScheme scheme_dur(int n_qubits, double x) { return scheme_dur_cirac(dur_spec(n_qubits, x)); }
MixingScheme scheme_llk(int n_qubits, double x) { return scheme_dur_cirac(llk_spec(n_qubits, x)); }
MixingScheme scheme_chi3(double x) { return scheme_dur_cirac(chi3_spec(x)); }

TwoPhotonSchmidtSource upb_source() {
  const double s5 = std::sqrt(5.0);
  return {std::sqrt((3.0 + s5) / 6.0), std::sqrt((3.0 - s5) / 6.0)};
}

Matrix2 upb_u() {
  const double s5 = std::sqrt(5.0);
  const double d = (s5 - 1.0) / std::sqrt(10.0 - 2.0 * s5);
  const double o = std::sqrt(2.0 / (5.0 - s5));
  return Matrix2{{Complex{d}, Complex{o}, Complex{o}, Complex{-d}}};
}

std::array<std::pair<Matrix2, Matrix2>, 4> upb_branch_unitaries() {
  const Matrix2 u = upb_u();
  const Matrix2 h = gates::hadamard();
  const Matrix2 x = gates::pauli_x();
  const Matrix2 y = gates::pauli_y();
  const Matrix2 z = gates::pauli_z();
  return {{
      {Complex{-1.0} * (u * z), z * u},
      {h * u, u * h},
      {x * u * h, x * u},
      {y * u, y * u * h},
  }};
}

MixingScheme scheme_upb() {
  const auto pairs = upb_branch_unitaries();
  const auto third = bb84_states();
  MixingScheme scheme{3, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    scheme.branches.push_back({0.25, upb_source(),
                               {LocalUnitary{1, pairs[i].first}, LocalUnitary{2, pairs[i].second}},
                               {third[i]}});
  }
  return scheme;
}

// ---------------------------------------------------------------- sampling

SampleResult sample_mixture(const MixingScheme& scheme, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_mixture: shots must be >= 1");
  const DensityMatrix analytic = assemble_mixture(scheme);
  std::vector<BranchOutput> outputs;
  std::vector<double> cumulative;
  double run = 0.0;
  for (const auto& b : scheme.branches) {
    outputs.push_back(run_branch(b));
    run += b.p;
    cumulative.push_back(run);
  }
  std::mt19937_64 rng(derive_seed(seed, 0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::uint64_t> counts(outputs.size(), 0);
  std::uint64_t accepted = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = unit(rng) * run;
    auto idx = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                        cumulative.begin());
    if (idx >= outputs.size()) idx = outputs.size() - 1;
    if (unit(rng) < outputs[idx].success) {
      ++counts[idx];
      ++accepted;
    }
  }
  if (accepted == 0) throw InvariantViolation("weight", "no shot passed post-selection");
  ComplexOperator acc(scheme.n_qubits);
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (counts[i] == 0) continue;
    acc.add_scaled(outputs[i].projector,
                   static_cast<double>(counts[i]) / (outputs[i].success * static_cast<double>(accepted)));
  }
  DensityMatrix empirical = DensityMatrix::from_mixture(std::move(acc));
  const double distance = trace_distance(empirical, analytic);
  return {std::move(empirical), distance, accepted};
}

}  // namespace boundent
