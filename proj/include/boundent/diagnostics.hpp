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

// Entanglement diagnostics: partial-transpose profiles and negativity,
// closed-form Dur-Cirac quantities, the PT-inequality functional, the
// unextendibility search for product bases, bound-entanglement certification,
// depolarizing-noise sweeps and the pure-state geometric measure.
//
// Negativity convention: N = ||rho^Gamma||_1 - 1 = 2 sum |negative eigenvalues|,
// so a Bell pair has negativity 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boundent/linalg.hpp"
#include "boundent/states.hpp"

namespace boundent {

inline constexpr int kMaxProfileQubits = 8;

// Eigenvalues above -tolerance count as non-negative.
double negativity(const DensityMatrix& rho, const Bipartition& cut, double tolerance = tol::kPsd);
double min_pt_eigenvalue(const DensityMatrix& rho, const Bipartition& cut);

struct PptRecord {
  Bipartition cut;
  double min_pt_eigenvalue;
  double negativity;
  bool is_ppt;
};

struct PptProfile {
  std::vector<PptRecord> records;

  bool all_ppt() const;
  const PptRecord& at(const Bipartition& cut) const;
};

// One record per canonical bipartition. N <= 8.
PptProfile ppt_profile(const DensityMatrix& rho, double tolerance = tol::kPsd);

// max{0, |Delta| - 2 lambda_j}
double dc_negativity(const DurCiracSpec& spec, std::uint64_t j);

// Unordered qubit pair (k < l) and a PPT cut that separates it.
struct PairCover {
  int k;
  int l;
  Bipartition cut;
};

struct UndistillabilityCertificate {
  bool undistillable = false;
  std::vector<PairCover> covers;
  std::vector<std::pair<int, int>> uncovered;
};

// Every qubit pair must be separated by some I_j with 2 lambda_j >= |Delta|.
UndistillabilityCertificate dc_undistillable(const DurCiracSpec& spec);

// Same pair-covering argument from a numeric profile.
UndistillabilityCertificate pair_covering(const PptProfile& profile);

// lambda0+/- = <Psi_0+/-|rho|Psi_0+/->, lambda_j = (<Psi_j+|rho|Psi_j+> + <Psi_j-|rho|Psi_j->)/2.
DurCiracSpec project_to_dc(const DensityMatrix& rho);

// tr(rho PT_N) with PT_N = 2^{N-1}(P(Psi_0+) - P(Psi_0-)); linear in rho.
double pt_inequality_signed(const DensityMatrix& rho);
// |tr(rho PT_N)|; > 1 violates the inequality.
double pt_inequality_value(const DensityMatrix& rho);

struct UpbCheck {
  bool unextendible = false;
  // A product state orthogonal to every member, when one exists.
  std::optional<Ket> witness;
  // The per-qubit factors of each member, as extracted.
  std::vector<std::vector<Ket>> factors;
};

// Per-qubit factors of a fully product ket; nullopt if psi is entangled across
// any qubit.
std::optional<std::vector<Ket>> product_factors(const Ket& psi, double tolerance = 1e-10);

// Exact decision by enumerating assignments of members to parties. Throws if
// any member is not a product state.
UpbCheck upb_unextendible(std::span<const Ket> basis);

enum class FamilyHint { none, upb };

enum class EntangledEvidenceKind { negativity_cut, upb_construction, asserted_only };
enum class Verdict { bound_entangled, distillable_entanglement_possible, no_entanglement_detected };

std::string to_string(EntangledEvidenceKind kind);
std::string to_string(Verdict verdict);

struct BoundEntanglementVerdict {
  EntangledEvidenceKind entangled_evidence = EntangledEvidenceKind::asserted_only;
  std::optional<Bipartition> negativity_cut;
  double evidence_negativity = 0.0;
  UndistillabilityCertificate undistillable;
  Verdict verdict = Verdict::no_entanglement_detected;
};

BoundEntanglementVerdict certify_bound_entangled(const DensityMatrix& rho,
                                                 FamilyHint hint = FamilyHint::none,
                                                 double tolerance = tol::kPsd);
BoundEntanglementVerdict certify_bound_entangled(const DensityMatrix& rho,
                                                 const PptProfile& profile, FamilyHint hint);

// (1 - eps) rho + eps 1/2^N
DensityMatrix depolarize(const DensityMatrix& rho, double eps);

struct NoiseThreshold {
  double lower;  // still NPT
  double upper;  // PPT
  double estimate;
  int iterations;
};

// Bisection on eps for the NPT -> PPT crossing on one cut, to bracket width
// <= width (at most 60 halvings). Throws if the cut is already PPT at eps = 0.
NoiseThreshold noise_threshold(const DensityMatrix& rho, const Bipartition& cut,
                               double width = 1e-6, double tolerance = tol::kPsd);

struct NoiseSample {
  double eps;
  double negativity;
};

// steps + 1 evenly spaced points on [0, eps_max].
std::vector<NoiseSample> noise_sweep(const DensityMatrix& rho, const Bipartition& cut,
                                     double eps_max, int steps, double tolerance = tol::kPsd);

struct GeometricMeasureResult {
  double max_overlap_sq;
  std::vector<Ket> factors;  // single-qubit, normalized
  Ket witness;               // tensor product of factors
  std::vector<double> restart_values;
};

// max over product states of |<prod|psi>|^2 by alternating single-qubit
// updates from `restarts` random starts.
GeometricMeasureResult geometric_measure_pure(const Ket& psi, int restarts, int iterations,
                                              std::uint64_t seed);

}  // namespace boundent
