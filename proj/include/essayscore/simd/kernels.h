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

#ifndef ESSAYSCORE_SIMD_KERNELS_H_
#define ESSAYSCORE_SIMD_KERNELS_H_

#include <cstddef>
#include <string_view>

namespace essayscore::simd {

// Dense double-precision kernels used by the network's inner loops. All
// matrices are row-major with a leading dimension equal to `cols`.
//
// Every backend computes the same mathematical result; only the order of
// floating-point accumulation differs, so results agree to rounding error
// (tests pin relative 1e-12). Within one backend the order is fixed, which
// keeps training runs bit-reproducible on a given machine.
struct Kernels {
  std::string_view name;

  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // y = A x (accumulate == false) or y += A x (accumulate == true);
  // A is rows x cols.
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols,
               const double* x, double* y, bool accumulate);

  // y += A^T x; A is rows x cols, x has `rows` entries, y has `cols`.
  void (*gemv_t)(const double* a, std::size_t rows, std::size_t cols,
                 const double* x, double* y);

  // A += x y^T; A is rows x cols.
  void (*ger)(const double* x, std::size_t rows, const double* y,
              std::size_t cols, double* a);
};

const Kernels& scalar_kernels();

// nullptr when the backend was not compiled in or the CPU lacks support.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// Best backend for this CPU, chosen once. ESSAYSCORE_SIMD=scalar|avx2|neon
// forces a choice (falls back to scalar if unavailable).
const Kernels& active_kernels();

}  // namespace essayscore::simd

#endif  // ESSAYSCORE_SIMD_KERNELS_H_
