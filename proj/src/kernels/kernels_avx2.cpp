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

// Built with -mavx2 -mfma. Only reached after the dispatcher has confirmed
// both features at runtime.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace boundent::kernels::detail {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// v * (re + i im) with (re, im) broadcast.
inline __m256d cmul_scalar(__m256d v, __m256d re, __m256d im) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(v, re, _mm256_mul_pd(swapped, im));
}

inline __m256d conj2(__m256d v) {
  const __m256d sign = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
  return _mm256_xor_pd(v, sign);
}

void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d re = _mm256_set1_pd(alpha.real());
  const __m256d im = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul_scalar(load2(x + i), re, im)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_conj_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d re = _mm256_set1_pd(alpha.real());
  const __m256d im = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul_scalar(conj2(load2(x + i)), re, im)));
  }
  for (; i < n; ++i) y[i] += alpha * std::conj(x[i]);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex dot_avx2(const Complex* x, const Complex* y, std::size_t n) {
  // direct = [xr yr, xi yi, ...], cross = [xr yi, xi yr, ...]
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  const __m256d flip = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  Complex acc{hsum(_mm256_mul_pd(direct, flip)), hsum(cross)};
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

Complex dot_conj_avx2(const Complex* x, const Complex* y, std::size_t n) {
  // x * conj(y): re = xr yr + xi yi, im = xi yr - xr yi
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  const __m256d flip = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
  Complex acc{hsum(direct), hsum(_mm256_mul_pd(cross, flip))};
  for (; i < n; ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

void rotate_pair_avx2(Complex* x, Complex* y, std::size_t n, Complex c11, Complex c12,
                      Complex c21, Complex c22) {
  const __m256d r11 = _mm256_set1_pd(c11.real()), i11 = _mm256_set1_pd(c11.imag());
  const __m256d r12 = _mm256_set1_pd(c12.real()), i12 = _mm256_set1_pd(c12.imag());
  const __m256d r21 = _mm256_set1_pd(c21.real()), i21 = _mm256_set1_pd(c21.imag());
  const __m256d r22 = _mm256_set1_pd(c22.real()), i22 = _mm256_set1_pd(c22.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    store2(x + i, _mm256_add_pd(cmul_scalar(xv, r11, i11), cmul_scalar(yv, r12, i12)));
    store2(y + i, _mm256_add_pd(cmul_scalar(xv, r21, i21), cmul_scalar(yv, r22, i22)));
  }
  for (; i < n; ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i];
    x[i] = c11 * xi + c12 * yi;
    y[i] = c21 * xi + c22 * yi;
  }
}

}  // namespace

const KernelTable kAvx2Table{
    "avx2", axpy_avx2, axpy_conj_avx2, dot_avx2, dot_conj_avx2, rotate_pair_avx2,
};

}  // namespace boundent::kernels::detail
