/* Copyright 2026 The essayscore Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cstdlib>
#include <string_view>

#include "essayscore/simd/kernels.h"

namespace essayscore::simd {

#if defined(ESSAYSCORE_HAVE_AVX2)
const Kernels& avx2_kernels_impl();
#endif
#if defined(ESSAYSCORE_HAVE_NEON)
const Kernels& neon_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#if defined(ESSAYSCORE_HAVE_AVX2)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels* neon_kernels() {
#if defined(ESSAYSCORE_HAVE_NEON)
  // Advanced SIMD is mandatory on aarch64.
  return &neon_kernels_impl();
#else
  return nullptr;
#endif
}

namespace {

const Kernels& choose() {
  const char* env = std::getenv("ESSAYSCORE_SIMD");
  const std::string_view forced = env ? env : "";
  if (forced == "scalar") return scalar_kernels();
  if (forced == "avx2") {
    const Kernels* k = avx2_kernels();
    return k ? *k : scalar_kernels();
  }
  if (forced == "neon") {
    const Kernels* k = neon_kernels();
    return k ? *k : scalar_kernels();
  }
  if (const Kernels* k = avx2_kernels()) return *k;
  if (const Kernels* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels& kernels = choose();
  return kernels;
}

}  // namespace essayscore::simd
