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

// Photon-polarization preparation schemes as data: a source, an ordered list
// of local unitaries and partial polarizers, and a firing probability per
// branch. Post-selected on every photon passing its filters.
//
// Photon k is qubit k; H = |0>, V = |1>.

#include <cstdint>
#include <variant>
#include <vector>

#include "boundent/gates.hpp"
#include "boundent/linalg.hpp"
#include "boundent/states.hpp"

namespace boundent {

struct GhzSource {
  int n_qubits;
  Sign sign;
};

// alpha |00> + beta |11>, alpha^2 + beta^2 = 1.
struct TwoPhotonSchmidtSource {
  double alpha;
  double beta;
};

struct SinglePhotonSource {
  Ket state;  // one qubit
};

using Source = std::variant<GhzSource, TwoPhotonSchmidtSource, SinglePhotonSource>;

struct LocalUnitary {
  int photon;
  Matrix2 unitary;
};

// diag(sqrt(T_H), sqrt(T_V)); T_H, T_V in (0, 1].
struct PartialPolarizer {
  int photon;
  double t_h;
  double t_v;
};

using Element = std::variant<LocalUnitary, PartialPolarizer>;

struct Branch {
  double p = 0.0;
  Source source;
  std::vector<Element> elements;
  // Single-photon states appended after the source photons, before any element acts.
  std::vector<Ket> extra_photons;
};

struct MixingScheme {
  int n_qubits = 0;
  std::vector<Branch> branches;
};

Ket emit(const Source& source);

struct FilterResult {
  Ket state;  // not renormalized
  double success;
};

FilterResult apply_filter(const Ket& psi, int photon, double t_h, double t_v);

struct BranchOutput {
  ComplexOperator projector;  // p-free outer product of the filtered ket, trace = success
  double success;
  double weight;  // p * success
};

BranchOutput run_branch(const Branch& branch);

// sum_i p_i |out_i><out_i| / sum_i weight_i. Throws InvariantViolation
// "probability_sum" when sum p differs from 1 by more than 1e-12.
DensityMatrix assemble_mixture(const MixingScheme& scheme);

// GHZ source plus a sigma_x (+) or sigma_x sigma_z (-) and a partial polarizer
// on one photon, for each of a, b, c and each sign; probabilities from
// p_GHZ : p_a T_V^a : p_b T_V^b : p_c T_V^c = 2 : a : b : c.
MixingScheme scheme_abls(double a, double b, double c);

struct GhzLikeTerm {
  std::uint64_t j;
  Sign sign;
  double p;
};

// One branch per term: GHZ+ source, sigma_z on photon 1 for the - sign, then
// sigma_x on each photon k with j_k = 1. Terms with p = 0 are dropped.
MixingScheme scheme_ghz_mixture(int n_qubits, const std::vector<GhzLikeTerm>& terms);

MixingScheme scheme_dur_cirac(const DurCiracSpec& spec);
MixingScheme scheme_smolin();
MixingScheme scheme_dur(int n_qubits, double x);
MixingScheme scheme_llk(int n_qubits, double x);
MixingScheme scheme_chi3(double x);

// Schmidt amplitudes of the two-photon source used by scheme_upb.
TwoPhotonSchmidtSource upb_source();
// The local unitary U mapping the Schmidt basis to the UPB factors.
Matrix2 upb_u();
// Two-photon unitary pairs (photon 1, photon 2) for the four branches.
std::array<std::pair<Matrix2, Matrix2>, 4> upb_branch_unitaries();
MixingScheme scheme_upb();

struct SampleResult {
  DensityMatrix empirical;
  double distance;  // trace distance to assemble_mixture
  std::uint64_t accepted;
};

// Draws `shots` branches by p, keeps each with its filter success probability
// and averages the normalized outputs of the kept shots.
SampleResult sample_mixture(const MixingScheme& scheme, std::uint64_t shots, std::uint64_t seed);

}  // namespace boundent
