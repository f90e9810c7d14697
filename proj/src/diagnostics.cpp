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

#include "boundent/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "boundent/errors.hpp"

namespace boundent {

double min_pt_eigenvalue(const DensityMatrix& rho, const Bipartition& cut) {
  return hermitian_spectrum(partial_transpose(rho, cut)).front();
}

double negativity(const DensityMatrix& rho, const Bipartition& cut, double tolerance) {
  const auto spectrum = hermitian_spectrum(partial_transpose(rho, cut));
  double sum = 0.0;
  for (double e : spectrum) {
    if (e < -tolerance) sum -= e;
  }
  return 2.0 * sum;
}

bool PptProfile::all_ppt() const {
  return std::all_of(records.begin(), records.end(), [](const PptRecord& r) { return r.is_ppt; });
}

const PptRecord& PptProfile::at(const Bipartition& cut) const {
  for (const auto& r : records) {
    if (r.cut == cut) return r;
  }
  throw std::out_of_range("PptProfile::at: cut " + cut.to_string() + " not in profile");
}

PptProfile ppt_profile(const DensityMatrix& rho, double tolerance) {
  const int n = rho.n_qubits();
  if (n > kMaxProfileQubits) {
    throw std::invalid_argument("ppt_profile: register of " + std::to_string(n) +
                                " qubits exceeds the limit of " +
                                std::to_string(kMaxProfileQubits));
  }
  if (n < 2) throw std::invalid_argument("ppt_profile: need at least 2 qubits");
  PptProfile profile;
  for (const Bipartition& cut : Bipartition::all(n)) {
    const auto spectrum = hermitian_spectrum(partial_transpose(rho, cut));
    double neg = 0.0;
    for (double e : spectrum) {
      if (e < -tolerance) neg -= 2.0 * e;
    }
    profile.records.push_back({cut, spectrum.front(), neg, spectrum.front() >= -tolerance});
  }
  return profile;
}

// ---------------------------------------------------------------- Dur-Cirac closed forms

double dc_negativity(const DurCiracSpec& spec, std::uint64_t j) {
  return std::max(0.0, std::abs(spec.delta()) - 2.0 * spec.lambda(j));
}

namespace {

UndistillabilityCertificate cover_pairs(int n, const std::vector<Bipartition>& ppt_cuts) {
  UndistillabilityCertificate cert;
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      const auto it = std::find_if(ppt_cuts.begin(), ppt_cuts.end(),
                                   [&](const Bipartition& c) { return c.separates(k, l); });
      if (it != ppt_cuts.end()) {
        cert.covers.push_back({k, l, *it});
      } else {
        cert.uncovered.emplace_back(k, l);
      }
    }
  }
  cert.undistillable = cert.uncovered.empty();
  return cert;
}

}  // namespace

UndistillabilityCertificate dc_undistillable(const DurCiracSpec& spec) {
  const int n = spec.n_qubits();
  const double delta = std::abs(spec.delta());
  std::vector<Bipartition> ppt_cuts;
  for (std::uint64_t j = 1; j <= spec.max_index(); ++j) {
    if (2.0 * spec.lambda(j) >= delta) ppt_cuts.push_back(Bipartition::from_dc_index(n, j));
  }
  return cover_pairs(n, ppt_cuts);
}

UndistillabilityCertificate pair_covering(const PptProfile& profile) {
  if (profile.records.empty()) return {};
  std::vector<Bipartition> ppt_cuts;
  for (const auto& r : profile.records) {
    if (r.is_ppt) ppt_cuts.push_back(r.cut);
  }
  return cover_pairs(profile.records.front().cut.n_qubits(), ppt_cuts);
}

DurCiracSpec project_to_dc(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  if (n < 2) throw std::invalid_argument("project_to_dc: need at least 2 qubits");
  // GHZ-basis kets have two nonzero amplitudes, so each overlap is a 2x2 minor.
  auto ghz_overlap = [&](std::uint64_t first, double sign) {
    const std::uint64_t second = (rho.dim() - 1) ^ first;
    const Complex v = rho(first, first) + rho(second, second) +
                      sign * (rho(first, second) + rho(second, first));
    return 0.5 * v.real();
  };
  const double l0p = ghz_overlap(0, 1.0);
  const double l0m = ghz_overlap(0, -1.0);
  std::map<std::uint64_t, double> lambdas;
  const std::uint64_t max_j = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t j = 1; j <= max_j; ++j) {
    const double value = 0.5 * (ghz_overlap(j << 1, 1.0) + ghz_overlap(j << 1, -1.0));
    lambdas[j] = std::max(0.0, value);
  }
  return DurCiracSpec(n, std::max(0.0, l0p), std::max(0.0, l0m), std::move(lambdas), 1e-9);
}

double pt_inequality_signed(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  const double scale = static_cast<double>(std::uint64_t{1} << (n - 1));
  return scale * (overlap(ghz(n, Sign::plus), rho) - overlap(ghz(n, Sign::minus), rho));
}

double pt_inequality_value(const DensityMatrix& rho) { return std::abs(pt_inequality_signed(rho)); }

// ---------------------------------------------------------------- certification

std::string to_string(EntangledEvidenceKind kind) {
  switch (kind) {
    case EntangledEvidenceKind::negativity_cut: return "negativity_cut";
    case EntangledEvidenceKind::upb_construction: return "upb_construction";
    case EntangledEvidenceKind::asserted_only: return "asserted_only";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::bound_entangled: return "bound_entangled";
    case Verdict::distillable_entanglement_possible: return "distillable_entanglement_possible";
    case Verdict::no_entanglement_detected: return "no_entanglement_detected";
  }
  return "unknown";
}

namespace {

bool supported_on_upb_complement(const DensityMatrix& rho) {
  if (rho.n_qubits() != 3) return false;
  const auto basis = upb_basis();
  if (!upb_unextendible(basis).unextendible) return false;
  return std::all_of(basis.begin(), basis.end(),
                     [&](const Ket& psi) { return overlap(psi, rho) <= 1e-10; });
}

}  // namespace

BoundEntanglementVerdict certify_bound_entangled(const DensityMatrix& rho,
                                                 const PptProfile& profile, FamilyHint hint) {
  BoundEntanglementVerdict v;
  const PptRecord* best = nullptr;
  for (const auto& r : profile.records) {
    if (!r.is_ppt && r.negativity > 0.0 && (best == nullptr || r.negativity > best->negativity)) {
      best = &r;
    }
  }
  if (best != nullptr) {
    v.entangled_evidence = EntangledEvidenceKind::negativity_cut;
    v.negativity_cut = best->cut;
    v.evidence_negativity = best->negativity;
  } else if (hint == FamilyHint::upb && supported_on_upb_complement(rho)) {
    v.entangled_evidence = EntangledEvidenceKind::upb_construction;
  }
  v.undistillable = pair_covering(profile);
  if (v.entangled_evidence == EntangledEvidenceKind::asserted_only) {
    v.verdict = Verdict::no_entanglement_detected;
  } else if (v.undistillable.undistillable) {
    v.verdict = Verdict::bound_entangled;
  } else {
    v.verdict = Verdict::distillable_entanglement_possible;
  }
  return v;
}

BoundEntanglementVerdict certify_bound_entangled(const DensityMatrix& rho, FamilyHint hint,
                                                 double tolerance) {
  return certify_bound_entangled(rho, ppt_profile(rho, tolerance), hint);
}

// ---------------------------------------------------------------- noise

DensityMatrix depolarize(const DensityMatrix& rho, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    std::ostringstream os;
    os << "depolarize: eps = " << eps << " outside [0, 1]";
    throw std::invalid_argument(os.str());
  }
  if (eps == 0.0) return rho;
  ComplexOperator op = rho.op();
  op *= 1.0 - eps;
  const double diag = eps / static_cast<double>(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i) op(i, i) += diag;
  return DensityMatrix::from_mixture(std::move(op));
}

NoiseThreshold noise_threshold(const DensityMatrix& rho, const Bipartition& cut, double width,
                               double tolerance) {
  if (negativity(rho, cut, tolerance) <= 0.0) {
    throw InvariantViolation("npt", "cut " + cut.to_string() + " is already PPT at eps = 0");
  }
  double lo = 0.0;
  double hi = 1.0;
  int it = 0;
  for (; it < 60 && hi - lo > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (negativity(depolarize(rho, mid), cut, tolerance) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi, 0.5 * (lo + hi), it};
}

std::vector<NoiseSample> noise_sweep(const DensityMatrix& rho, const Bipartition& cut,
                                     double eps_max, int steps, double tolerance) {
  if (steps < 1) throw std::invalid_argument("noise_sweep: steps must be >= 1");
  if (!(eps_max >= 0.0 && eps_max <= 1.0)) {
    throw std::invalid_argument("noise_sweep: eps_max outside [0, 1]");
  }
  std::vector<NoiseSample> rows;
  for (int s = 0; s <= steps; ++s) {
    const double eps = s == steps ? eps_max : eps_max * s / steps;
    rows.push_back({eps, negativity(depolarize(rho, eps), cut, tolerance)});
  }
  return rows;
}

}  // namespace boundent
