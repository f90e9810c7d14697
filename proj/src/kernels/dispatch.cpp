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

#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace boundent::kernels {

const KernelTable& scalar_kernels() { return detail::kScalarTable; }

const KernelTable* avx2_kernels() {
#if defined(BOUNDENT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(BOUNDENT_HAVE_NEON)
  // Advanced SIMD is mandatory on aarch64.
  return &detail::kNeonTable;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& resolve() {
  const char* forced = std::getenv("BOUNDENT_KERNELS");
  const std::string_view want = forced != nullptr ? forced : "";
  if (want == "scalar") return scalar_kernels();
  if (const KernelTable* t = avx2_kernels(); t != nullptr && (want.empty() || want == "avx2")) {
    return *t;
  }
  if (const KernelTable* t = neon_kernels(); t != nullptr && (want.empty() || want == "neon")) {
    return *t;
  }
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = resolve();
  return table;
}

}  // namespace boundent::kernels
