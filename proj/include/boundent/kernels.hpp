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

// Complex double-precision inner-loop kernels.
//
// Every kernel has a scalar reference implementation. SIMD variants (AVX2+FMA
// on x86-64, NEON on aarch64) are compiled into separate translation units and
// selected once at runtime. Set BOUNDENT_KERNELS=scalar to force the reference
// path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace boundent::kernels {

using Complex = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // y[i] += alpha * x[i]
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  // y[i] += alpha * conj(x[i])
  void (*axpy_conj)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  // sum_i x[i] * y[i]
  Complex (*dot)(const Complex* x, const Complex* y, std::size_t n);
  // sum_i x[i] * conj(y[i])
  Complex (*dot_conj)(const Complex* x, const Complex* y, std::size_t n);
  // (x, y) <- (c11 x + c12 y, c21 x + c22 y), elementwise
  void (*rotate_pair)(Complex* x, Complex* y, std::size_t n, Complex c11, Complex c12,
                      Complex c21, Complex c22);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// The table every library routine goes through. Resolved on first call.
const KernelTable& active_kernels();

inline void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

inline void axpy_conj(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  active_kernels().axpy_conj(alpha, x.data(), y.data(), x.size());
}

inline Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  return active_kernels().dot(x.data(), y.data(), x.size());
}

inline Complex dot_conj(std::span<const Complex> x, std::span<const Complex> y) {
  return active_kernels().dot_conj(x.data(), y.data(), x.size());
}

inline void rotate_pair(std::span<Complex> x, std::span<Complex> y, Complex c11, Complex c12,
                        Complex c21, Complex c22) {
  active_kernels().rotate_pair(x.data(), y.data(), x.size(), c11, c12, c21, c22);
}

}  // namespace boundent::kernels
