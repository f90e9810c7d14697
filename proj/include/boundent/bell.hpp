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

// Mermin-Klyshko Bell operators and a seeded coordinate-ascent search over
// two-setting local measurements.
//
// Normalization: the local-hidden-variable bound of <B_N> is 1 and the
// quantum maximum is 2^{(N-1)/2}.

#include <array>
#include <cstdint>
#include <vector>

#include "boundent/gates.hpp"
#include "boundent/linalg.hpp"

namespace boundent {

// Unit vector (sin t cos p, sin t sin p, cos t).
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;

  std::array<double, 3> vector() const;
  static BlochAngles from_vector(const std::array<double, 3>& v);
};

struct PartySettings {
  BlochAngles a;
  BlochAngles a_prime;
};

struct MeasurementSettings {
  std::vector<PartySettings> parties;  // parties[k-1] measures qubit k

  int n_qubits() const noexcept { return static_cast<int>(parties.size()); }
};

// B_1 = a_1.sigma; B_n = 1/2 B_{n-1} (x) (a_n + a'_n).sigma + 1/2 B'_{n-1} (x) (a_n - a'_n).sigma,
// B' obtained by swapping primed and unprimed settings. N >= 2.
ComplexOperator mk_operator(const MeasurementSettings& settings);

// tr(rho B_N)
double mk_value(const DensityMatrix& rho, const MeasurementSettings& settings);

// Coefficient of (x)_k O_k^{s_k} in B_N, with O^0 = a.sigma, O^1 = a'.sigma and
// s_1 the most significant bit of s.
std::vector<double> mk_coefficients(int n_qubits);

// T_mu = tr(rho sigma_mu1 (x) ... (x) sigma_muN), mu_k in {x, y, z}; mu_1 is the
// most significant base-3 digit.
std::vector<double> correlation_tensor(const DensityMatrix& rho);

// <B_N> via the correlation tensor. Agrees with mk_value.
double mk_value_from_tensor(const std::vector<double>& tensor, const MeasurementSettings& settings);

struct MkRestart {
  double initial_value = 0.0;
  double final_value = 0.0;
  std::vector<double> trajectory;  // best-so-far value after each sweep
};

struct MkOptimizeResult {
  double best_value = 0.0;
  MeasurementSettings settings;
  int best_restart = 0;
  std::vector<MkRestart> restarts;
};

inline constexpr int kMaxBellQubits = 8;

// Coordinate ascent over the 4N angles from `restarts` seeded random starts,
// at most `iterations` sweeps each. One sweep visits every party and moves its
// two settings to the maximizers of <B_N> with all other settings held fixed.
MkOptimizeResult mk_optimize(const DensityMatrix& rho, int restarts, int iterations,
                             std::uint64_t seed);

}  // namespace boundent
