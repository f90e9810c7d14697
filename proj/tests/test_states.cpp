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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "boundent/diagnostics.hpp"
#include "boundent/errors.hpp"
#include "boundent/gates.hpp"
#include "boundent/states.hpp"
#include "oracle.hpp"

using namespace boundent;
using C = std::complex<double>;
using oracle::Mat;
using oracle::Vec;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

Vec basis_vec(int n, std::uint64_t idx) {
  Vec v = Vec::Zero(Eigen::Index{1} << n);
  v(static_cast<Eigen::Index>(idx)) = 1.0;
  return v;
}

Vec qubit(C a, C b) {
  Vec v(2);
  v << a, b;
  return v;
}

double max_diff(const Ket& k, const Vec& v) {
  double m = 0.0;
  for (std::size_t i = 0; i < k.dim(); ++i) m = std::max(m, std::abs(k[i] - v(static_cast<Eigen::Index>(i))));
  return m;
}

bool valid_density(const DensityMatrix& rho) {
  const auto m = oracle::to_eigen(rho);
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 && std::abs(m.trace().real() - 1.0) <= 1e-12 &&
         oracle::eigenvalues(m).minCoeff() >= -1e-10;
}

// Schmidt coefficients of a two-qubit ket, descending.
std::array<double, 2> schmidt(const Ket& k) {
  Mat m(2, 2);
  m << k[0], k[1], k[2], k[3];
  Eigen::JacobiSVD<Mat> svd(m);
  return {svd.singularValues()(0), svd.singularValues()(1)};
}

}  // namespace

TEST(Ghz, Definition) {
  const Ket g2 = ghz(2, Sign::plus);
  EXPECT_LE(max_diff(g2, oracle::to_eigen(bell_states()[0])), 0.0);
  EXPECT_LE(max_diff(ghz(3, Sign::plus), kS * (basis_vec(3, 0) + basis_vec(3, 7))), 1e-16);
  EXPECT_NEAR(std::norm(inner(ghz(4, Sign::minus), ghz(4, Sign::plus))), 0.0, 1e-30);
  EXPECT_THROW(ghz(1, Sign::plus), std::invalid_argument);
}

TEST(GhzLike, Transcription) {
  EXPECT_LE(max_diff(ghz_like(4, 6, Sign::plus), kS * (basis_vec(4, 0b1100) + basis_vec(4, 0b0011))), 1e-16);
  EXPECT_LE(max_diff(ghz_like(3, 1, Sign::minus), kS * (basis_vec(3, 0b010) - basis_vec(3, 0b101))), 1e-16);
  EXPECT_THROW(ghz_like(3, 4, Sign::plus), std::invalid_argument);
}

TEST(GhzLike, FullBasisIsOrthonormal) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Ket> all;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 1)); ++j) {
      all.push_back(ghz_like(n, j, Sign::plus));
      all.push_back(ghz_like(n, j, Sign::minus));
    }
    ASSERT_EQ(all.size(), std::size_t{1} << n);
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        EXPECT_NEAR(std::abs(inner(all[a], all[b])), a == b ? 1.0 : 0.0, 1e-15);
      }
    }
  }
}

TEST(Smolin, EntriesAndPurity) {
  const DensityMatrix s = smolin_bell();
  EXPECT_NEAR(s(0, 0).real(), 1.0 / 8, 1e-15);
  EXPECT_NEAR(s(0, 15).real(), 1.0 / 8, 1e-15);
  EXPECT_NEAR(purity(s), 0.25, 1e-14);
  EXPECT_TRUE(valid_density(s));
}

TEST(Smolin, BellFormMatchesKroneckerOracle) {
  const Vec phi_p = kS * (basis_vec(2, 0) + basis_vec(2, 3));
  const Vec phi_m = kS * (basis_vec(2, 0) - basis_vec(2, 3));
  const Vec psi_p = kS * (basis_vec(2, 1) + basis_vec(2, 2));
  const Vec psi_m = kS * (basis_vec(2, 1) - basis_vec(2, 2));
  Mat expect = Mat::Zero(16, 16);
  for (const Vec& v : {phi_p, phi_m, psi_p, psi_m}) expect += 0.25 * oracle::kron(oracle::projector(v), oracle::projector(v));
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(smolin_bell()), expect), 1e-15);
}

TEST(Smolin, GhzFormEqualsBellForm) {
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(smolin_ghz()), oracle::to_eigen(smolin_bell())), 1e-15);
  EXPECT_NEAR(trace_distance(smolin_ghz(), smolin_bell()), 0.0, 1e-12);
  EXPECT_EQ(numerical_rank(smolin_ghz()), 4);
  EXPECT_NEAR(overlap(smolin_ghz_components()[2], smolin_ghz()), 0.25, 1e-15);
  // X_1 is the GHZ-like state with j = 6.
  EXPECT_NEAR(std::abs(inner(smolin_ghz_components()[1], ghz_like(4, 6, Sign::plus))), 1.0, 1e-15);
}

TEST(Abls, DiagonalAndValidity) {
  // n = 2 + 1 + 1 + 1 + 1 + 1 + 1 = 8
  EXPECT_NEAR(abls({1, 1, 1})(0b001, 0b001).real(), 1.0 / 8, 1e-15);
  EXPECT_FALSE((ABLSParams{1, 1, 1}.flag_entangled()));
  EXPECT_TRUE((ABLSParams{2, 3, 5}.flag_entangled()));
  const DensityMatrix r = abls({2, 3, 5});
  EXPECT_NEAR(r.op().trace().real(), 1.0, 1e-12);
  EXPECT_TRUE(valid_density(r));
  for (const auto& cut : Bipartition::all(3)) EXPECT_GE(min_pt_eigenvalue(r, cut), -1e-10);
  EXPECT_THROW(abls({0, 1, 1}), std::invalid_argument);
}

TEST(Abls, DiagonalFormEqualsMixtureFormOnGrid) {
  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    for (double b : {0.5, 1.0, 2.0, 3.0}) {
      for (double c : {0.5, 1.0, 2.0, 3.0}) {
        EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(abls({a, b, c})), oracle::to_eigen(abls_mixture_form({a, b, c}))),
                  1e-12);
      }
    }
  }
}

TEST(DurCirac, SpecValidation) {
  EXPECT_THROW(DurCiracSpec(3, 0.5, 0.0, {}), InvariantViolation);
  EXPECT_THROW(DurCiracSpec(3, -0.1, 0.0, {{1, 0.55}}), std::invalid_argument);
  EXPECT_THROW(DurCiracSpec(3, 1.0, 0.0, {{4, 0.0}}), std::invalid_argument);
  const DurCiracSpec flipped(3, 0.2, 0.4, {{1, 0.2}});
  EXPECT_FALSE(flipped.is_canonical());
  EXPECT_TRUE(flipped.canonical().is_canonical());
  EXPECT_DOUBLE_EQ(flipped.canonical().delta(), 0.2);
}

TEST(DurCirac, MatchesDirectProjectorSum) {
  const DurCiracSpec spec(3, 1.0 / 3, 0.0, {{1, 1.0 / 6}, {3, 1.0 / 6}});
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(dur_cirac(spec)), oracle::to_eigen(chi3(1.0 / 3))), 1e-15);
  const DensityMatrix bell = dur_cirac(DurCiracSpec(2, 1.0, 0.0, {}));
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(bell), oracle::projector(oracle::to_eigen(bell_states()[0]))), 1e-15);

  // Direct oracle: build each GHZ-like vector from digits.
  const int n = 4;
  const DurCiracSpec s4(n, 0.3, 0.1, {{2, 0.1}, {5, 0.15}, {7, 0.05}});
  Mat expect = Mat::Zero(16, 16);
  auto ghz_vec = [&](std::uint64_t j, double sign) {
    return Vec(kS * (basis_vec(n, j << 1) + sign * basis_vec(n, ((j << 1) ^ 15))));
  };
  expect += 0.3 * oracle::projector(ghz_vec(0, 1)) + 0.1 * oracle::projector(ghz_vec(0, -1));
  for (auto [j, l] : s4.lambdas()) expect += l * (oracle::projector(ghz_vec(j, 1)) + oracle::projector(ghz_vec(j, -1)));
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(dur_cirac(s4)), expect), 1e-15);
}

TEST(DurState, EntriesAndLimits) {
  EXPECT_NEAR(dur_state(4, 0.2)(0b1000, 0b1000).real(), 0.1, 1e-15);
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(dur_state(5, 1.0)), oracle::projector(oracle::to_eigen(ghz(5, Sign::plus)))),
            1e-15);
  EXPECT_THROW(dur_state(4, 1.5), std::invalid_argument);
  EXPECT_THROW(dur_state(2, 0.5), std::invalid_argument);
}

TEST(DurState, GFormAndSpecFormAgree) {
  for (int n = 3; n <= 6; ++n) {
    for (double x : {0.0, 0.1, 1.0 / (n + 1), 0.7}) {
      const auto d = oracle::to_eigen(dur_state(n, x));
      EXPECT_LE(oracle::max_abs_diff(d, oracle::to_eigen(dur_state_g_form(n, x))), 1e-12);
      EXPECT_LE(oracle::max_abs_diff(d, oracle::to_eigen(dur_cirac(dur_spec(n, x)))), 1e-12);
    }
  }
}

TEST(GState, SigmaIdentity) {
  EXPECT_LE(max_diff(g_state(3, 1, Sign::plus), kS * (basis_vec(3, 0b100) + basis_vec(3, 0b011))), 1e-16);
  for (int n = 3; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Ket viax = apply_local(ghz(n, Sign::plus), gates::pauli_x(), k);
      EXPECT_LE(max_diff(g_state(n, k, Sign::plus), oracle::to_eigen(viax)), 1e-15);
      const Ket viaxz = apply_local(apply_local(ghz(n, Sign::plus), gates::pauli_z(), k), gates::pauli_x(), k);
      EXPECT_NEAR(std::abs(inner(g_state(n, k, Sign::minus), viaxz)), 1.0, 1e-15);
      // P(g+) + P(g-) = P_k + Pbar_k
      const Vec u = basis_vec(n, qubit_bit(n, k));
      const Vec v = basis_vec(n, ((std::uint64_t{1} << n) - 1) ^ qubit_bit(n, k));
      const Mat lhs = oracle::projector(oracle::to_eigen(g_state(n, k, Sign::plus))) +
                      oracle::projector(oracle::to_eigen(g_state(n, k, Sign::minus)));
      EXPECT_LE(oracle::max_abs_diff(lhs, oracle::projector(u) + oracle::projector(v)), 1e-15);
    }
  }
  EXPECT_THROW(g_state(3, 4, Sign::plus), std::invalid_argument);
}

TEST(Llk, IndexSetAndSpec) {
  EXPECT_EQ(llk_index_set(4), (std::vector<std::uint64_t>{3, 6}));
  EXPECT_EQ(llk_index_set(6), (std::vector<std::uint64_t>{3, 6, 12, 24}));
  const DurCiracSpec ref(4, 1.0 / 3, 0.0, {{3, 1.0 / 6}, {6, 1.0 / 6}});
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(llk_state(4, 1.0 / 3)), oracle::to_eigen(dur_cirac(ref))), 1e-15);
  for (int n = 4; n <= 6; ++n) {
    for (double x : {0.1, 1.0 / (n - 1)}) EXPECT_NEAR(llk_state(n, x).op().trace().real(), 1.0, 1e-12);
  }
  EXPECT_THROW(llk_state(3, 0.5), std::invalid_argument);
}

TEST(Chi3, Limits) {
  EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(chi3(1.0)), oracle::projector(oracle::to_eigen(ghz(3, Sign::plus)))), 1e-15);
  const DensityMatrix z = chi3(0.0);
  for (const auto& cut : Bipartition::all(3)) EXPECT_EQ(negativity(z, cut), 0.0);
  EXPECT_THROW(chi3(-0.1), std::invalid_argument);
}

TEST(Families, AffineInX) {
  auto check = [](auto make) {
    const Mat r0 = oracle::to_eigen(make(0.0));
    const Mat r1 = oracle::to_eigen(make(1.0));
    for (double x : {0.13, 0.5, 0.91}) EXPECT_LE(oracle::max_abs_diff(oracle::to_eigen(make(x)), x * r1 + (1 - x) * r0), 1e-15);
  };
  check([](double x) { return dur_state(5, x); });
  check([](double x) { return llk_state(5, x); });
  check([](double x) { return chi3(x); });
}

TEST(Families, AllOutputsAreValidDensityMatrices) {
  EXPECT_TRUE(valid_density(smolin_bell()));
  EXPECT_TRUE(valid_density(upb_state()));
  for (double a : {0.5, 2.0}) EXPECT_TRUE(valid_density(abls({a, 3.0, 0.5})));
  for (int n = 3; n <= 6; ++n) EXPECT_TRUE(valid_density(dur_state(n, 0.3)));
  for (int n = 4; n <= 6; ++n) EXPECT_TRUE(valid_density(llk_state(n, 0.3)));
  EXPECT_TRUE(valid_density(chi3(0.25)));
}

TEST(Families, ProjectToDcRecoversSpec) {
  std::vector<DurCiracSpec> specs{dur_spec(5, 0.2), llk_spec(5, 0.25), chi3_spec(1.0 / 3),
                                  DurCiracSpec(4, 0.3, 0.1, {{2, 0.1}, {5, 0.15}, {7, 0.05}})};
  for (const auto& s : specs) {
    const DurCiracSpec back = project_to_dc(dur_cirac(s));
    EXPECT_NEAR(back.lambda0_plus(), s.lambda0_plus(), 1e-14);
    EXPECT_NEAR(back.lambda0_minus(), s.lambda0_minus(), 1e-14);
    for (std::uint64_t j = 1; j <= s.max_index(); ++j) EXPECT_NEAR(back.lambda(j), s.lambda(j), 1e-14);
  }
}

// ---------------------------------------------------------------- UPB

TEST(Upb, BasisIsOrthonormalProductAndCyclic) {
  const auto b = upb_basis();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(inner(b[i], b[j])), i == j ? 1.0 : 0.0, 1e-15);
    EXPECT_TRUE(product_factors(b[i]).has_value());
  }
  const Vec plus = qubit(kS, kS);
  const Vec minus = qubit(kS, -kS);
  const Vec one = qubit(0.0, 1.0);
  EXPECT_LE(max_diff(b[1], oracle::kron(oracle::kron(one, plus), minus)), 1e-15);
  // Cyclic shift A -> B -> C -> A of psi_2 gives psi_3.
  EXPECT_LE(max_diff(b[2], oracle::kron(oracle::kron(minus, one), plus)), 1e-15);
}

TEST(Upb, StateSpectrumAndSupport) {
  const DensityMatrix r = upb_state();
  for (const Ket& k : upb_basis()) EXPECT_NEAR(overlap(k, r), 0.0, 1e-15);
  const auto ev = hermitian_spectrum(r.op());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], 0.0, 1e-12);
  for (std::size_t i = 4; i < 8; ++i) EXPECT_NEAR(ev[i], 0.25, 1e-12);
  EXPECT_EQ(numerical_rank(r), 4);
}

TEST(Upb, PhiDecompositionEqualsState) {
  Mat sum = Mat::Zero(8, 8);
  for (const Ket& phi : upb_phi_decomposition()) {
    EXPECT_NEAR(phi.squared_norm(), 1.0, 1e-14);
    sum += 0.25 * oracle::projector(oracle::to_eigen(phi));
    for (const Ket& psi : upb_basis()) EXPECT_NEAR(std::abs(inner(phi, psi)), 0.0, 1e-14);
  }
  EXPECT_LE(oracle::max_abs_diff(sum, oracle::to_eigen(upb_state())), 1e-12);
  const Vec chi1 = (basis_vec(2, 1) - basis_vec(2, 2) + basis_vec(2, 3)) / std::sqrt(3.0);
  EXPECT_NEAR(std::abs(oracle::to_eigen(upb_two_qubit_factors()[0]).dot(chi1)), 1.0, 1e-14);
}

TEST(Upb, FactorsAreProductWithBb84Third) {
  const auto phis = upb_phi_decomposition();
  const auto chis = upb_two_qubit_factors();
  const auto bb = bb84_states();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LE(max_diff(phis[i], oracle::kron(oracle::to_eigen(chis[i]), oracle::to_eigen(bb[i]))), 1e-15);
    const auto s = schmidt(chis[i]);
    EXPECT_NEAR(s[0], std::sqrt((3 + std::sqrt(5.0)) / 6), 1e-12);
    EXPECT_NEAR(s[1], std::sqrt((3 - std::sqrt(5.0)) / 6), 1e-12);
    EXPECT_NEAR(s[0], 0.934172, 1e-6);
    EXPECT_NEAR(s[1], 0.356822, 1e-6);
  }
}
