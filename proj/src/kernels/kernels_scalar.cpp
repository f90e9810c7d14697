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

#include "kernels_impl.hpp"

namespace boundent::kernels::detail {

namespace {

void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_conj_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * std::conj(x[i]);
}

Complex dot_scalar(const Complex* x, const Complex* y, std::size_t n) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

Complex dot_conj_scalar(const Complex* x, const Complex* y, std::size_t n) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

void rotate_pair_scalar(Complex* x, Complex* y, std::size_t n, Complex c11, Complex c12,
                        Complex c21, Complex c22) {
  for (std::size_t i = 0; i < n; ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i];
    x[i] = c11 * xi + c12 * yi;
    y[i] = c21 * xi + c22 * yi;
  }
}

}  // namespace

const KernelTable kScalarTable{
    "scalar", axpy_scalar, axpy_conj_scalar, dot_scalar, dot_conj_scalar, rotate_pair_scalar,
};

}  // namespace boundent::kernels::detail
