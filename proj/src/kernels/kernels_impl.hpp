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

#include "boundent/kernels.hpp"

namespace boundent::kernels::detail {

extern const KernelTable kScalarTable;

#if defined(BOUNDENT_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

#if defined(BOUNDENT_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

}  // namespace boundent::kernels::detail
