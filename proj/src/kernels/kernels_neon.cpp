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

// aarch64 only. One complex double per float64x2_t: [re, im].

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace boundent::kernels::detail {

namespace {

inline float64x2_t load1(const Complex* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline void store1(Complex* p, float64x2_t v) { vst1q_f64(reinterpret_cast<double*>(p), v); }

// v * (re + i im); rot = [-1, 1] applied to the swapped lanes.
inline float64x2_t cmul(float64x2_t v, double re, double im) {
  const float64x2_t swapped = vextq_f64(v, v, 1);
  const float64x2_t sign = {-1.0, 1.0};
  return vfmaq_n_f64(vmulq_f64(vmulq_n_f64(swapped, im), sign), v, re);
}

inline float64x2_t conj1(float64x2_t v) {
  const float64x2_t sign = {1.0, -1.0};
  return vmulq_f64(v, sign);
}

void axpy_neon(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    store1(y + i, vaddq_f64(load1(y + i), cmul(load1(x + i), alpha.real(), alpha.imag())));
  }
}

void axpy_conj_neon(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    store1(y + i,
           vaddq_f64(load1(y + i), cmul(conj1(load1(x + i)), alpha.real(), alpha.imag())));
  }
}

Complex dot_neon(const Complex* x, const Complex* y, std::size_t n) {
  float64x2_t direct = vdupq_n_f64(0.0);
  float64x2_t cross = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = load1(x + i);
    const float64x2_t yv = load1(y + i);
    direct = vfmaq_f64(direct, xv, yv);
    cross = vfmaq_f64(cross, xv, vextq_f64(yv, yv, 1));
  }
  return {vgetq_lane_f64(direct, 0) - vgetq_lane_f64(direct, 1), vaddvq_f64(cross)};
}

Complex dot_conj_neon(const Complex* x, const Complex* y, std::size_t n) {
  float64x2_t direct = vdupq_n_f64(0.0);
  float64x2_t cross = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = load1(x + i);
    const float64x2_t yv = load1(y + i);
    direct = vfmaq_f64(direct, xv, yv);
    cross = vfmaq_f64(cross, xv, vextq_f64(yv, yv, 1));
  }
  return {vaddvq_f64(direct), vgetq_lane_f64(cross, 1) - vgetq_lane_f64(cross, 0)};
}

void rotate_pair_neon(Complex* x, Complex* y, std::size_t n, Complex c11, Complex c12,
                      Complex c21, Complex c22) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = load1(x + i);
    const float64x2_t yv = load1(y + i);
    store1(x + i, vaddq_f64(cmul(xv, c11.real(), c11.imag()), cmul(yv, c12.real(), c12.imag())));
    store1(y + i, vaddq_f64(cmul(xv, c21.real(), c21.imag()), cmul(yv, c22.real(), c22.imag())));
  }
}

}  // namespace

const KernelTable kNeonTable{
    "neon", axpy_neon, axpy_conj_neon, dot_neon, dot_conj_neon, rotate_pair_neon,
};

}  // namespace boundent::kernels::detail
