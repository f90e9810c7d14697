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

// Constructors for the pure and mixed multi-qubit states studied here:
// GHZ and GHZ-like kets, the Smolin state in both its Bell-pair and GHZ forms,
// the three-qubit ABLS family, Dur-Cirac standard-form states and the Dur,
// Lee-Lee-Kim and Chi families built on them, and the SHIFTS UPB state.
//
// Photon polarization H/V is identified with |0>/|1>.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "boundent/linalg.hpp"

namespace boundent {

enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

// (|0...0> +/- |1...1>)/sqrt(2), N >= 2.
Ket ghz(int n_qubits, Sign sign);

// (|j_1..j_{N-1} 0> +/- |~j_1..~j_{N-1} 1>)/sqrt(2) for 1 <= j <= 2^{N-1}-1.
// j = 0 gives ghz(n_qubits, sign).
Ket ghz_like(int n_qubits, std::uint64_t j, Sign sign);

// Bell states Phi+/-, Psi+/- in the order Phi+, Phi-, Psi+, Psi-.
std::array<Ket, 4> bell_states();

// (1/4) sum_i P(Bell_i)_{12} (x) P(Bell_i)_{34}
DensityMatrix smolin_bell();
// (1/4) sum_i |X_i><X_i| over the four GHZ-type kets X_0..X_3.
DensityMatrix smolin_ghz();
// X_0..X_3: (|0000>+|1111>), (|0011>+|1100>), (|0101>+|1010>), (|0110>+|1001>), each / sqrt(2).
std::array<Ket, 4> smolin_ghz_components();

struct ABLSParams {
  double a;
  double b;
  double c;

  // a*b*c != 1; the abc = 1 boundary is separable.
  bool flag_entangled() const;
  double normalization() const;  // 2 + a + 1/a + b + 1/b + c + 1/c
};

// Diagonal-plus-GHZ form. Throws on non-positive parameters.
DensityMatrix abls(const ABLSParams& params);
// Same state assembled as (2 P(GHZ) + sum_{x in a,b,c} sum_{+/-} |psi_x^{+/-}><psi_x^{+/-}|)/n.
DensityMatrix abls_mixture_form(const ABLSParams& params);
// Unnormalized psi_x^{+/-}; which = 'a', 'b' or 'c'.
Ket abls_component(const ABLSParams& params, char which, Sign sign);

// Coefficients of the Dur-Cirac standard form
//   lambda0+ P(Psi_0+) + lambda0- P(Psi_0-) + sum_j lambda_j (P(Psi_j+) + P(Psi_j-)).
class DurCiracSpec {
 public:
  // lambdas: j -> lambda_j for 1 <= j <= 2^{N-1}-1, unlisted j are zero.
  // Throws on negative coefficients, j out of range or broken normalization
  // lambda0+ + lambda0- + 2 sum lambda_j = 1 (within tolerance).
  DurCiracSpec(int n_qubits, double lambda0_plus, double lambda0_minus,
               std::map<std::uint64_t, double> lambdas, double tolerance = tol::kNormalization);

  int n_qubits() const noexcept { return n_qubits_; }
  double lambda0_plus() const noexcept { return lambda0_plus_; }
  double lambda0_minus() const noexcept { return lambda0_minus_; }
  double lambda(std::uint64_t j) const;
  const std::map<std::uint64_t, double>& lambdas() const noexcept { return lambdas_; }
  std::uint64_t max_index() const noexcept { return (std::uint64_t{1} << (n_qubits_ - 1)) - 1; }

  double delta() const noexcept { return lambda0_plus_ - lambda0_minus_; }
  bool is_canonical() const noexcept { return delta() >= 0.0; }
  // Swaps lambda0+/- when delta < 0 (a local sigma_z relabelling).
  DurCiracSpec canonical() const;

 private:
  int n_qubits_;
  double lambda0_plus_;
  double lambda0_minus_;
  std::map<std::uint64_t, double> lambdas_;
};

DensityMatrix dur_cirac(const DurCiracSpec& spec);

// x P(GHZ) + (1-x)/(2N) sum_k (P_k + Pbar_k), N >= 3, 0 <= x <= 1.
DensityMatrix dur_state(int n_qubits, double x);
// Same state via the G_k^{+/-} mixture.
DensityMatrix dur_state_g_form(int n_qubits, double x);
DurCiracSpec dur_spec(int n_qubits, double x);
// (|u_k> +/- |v_k>)/sqrt(2), u_k = single 1 at qubit k, v_k its complement.
Ket g_state(int n_qubits, int k, Sign sign);

// LLK index set J_N = {3 * 2^m : 0 <= m <= N-3}.
std::vector<std::uint64_t> llk_index_set(int n_qubits);
DurCiracSpec llk_spec(int n_qubits, double x);
// x P(Psi_0+) + (1-x)/(2(N-2)) sum_{j in J_N} (P(Psi_j+) + P(Psi_j-)), N >= 4.
DensityMatrix llk_state(int n_qubits, double x);

DurCiracSpec chi3_spec(double x);
// x P(Psi_0+) + (1-x)/4 sum_{j=1,3} (P(Psi_j+) + P(Psi_j-)).
DensityMatrix chi3(double x);

// |0,0,0>, |1,+,->, |-,1,+>, |+,-,1>
std::array<Ket, 4> upb_basis();
// (1/4)(1 - sum_i |psi_i><psi_i|)
DensityMatrix upb_state();

// Two-qubit factors chi_i of the AB:C product decomposition of the UPB state.
std::array<Ket, 4> upb_two_qubit_factors();
// Third-qubit factors |0>, |1>, |+>, |->.
std::array<Ket, 4> bb84_states();
// phi_i = chi_i (x) bb84_i
std::array<Ket, 4> upb_phi_decomposition();

// |+>, |-> helpers.
Ket plus_state();
Ket minus_state();

}  // namespace boundent
