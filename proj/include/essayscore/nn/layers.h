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

#ifndef ESSAYSCORE_NN_LAYERS_H_
#define ESSAYSCORE_NN_LAYERS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "essayscore/nn/params.h"
#include "essayscore/simd/kernels.h"

namespace essayscore::nn {

// Row-major n x dim copies of E's rows. PAD (index 0) yields zeros.
// Throws DataError for an index outside [0, E.rows).
void embed(std::span<const std::int32_t> indices, ConstMatrixView E, std::vector<double>& x);

// z_j = relu(W [x_{j-r}; ...; x_{j+r}] + b) with r = window / 2 and zero
// vectors outside [0, n). x is n x dim, W is filters x (window * dim), z is
// n x filters.
void conv1d(const double* x, std::size_t n, std::size_t dim, ConstMatrixView W, const double* b,
            std::size_t window, double* z, const simd::Kernels& k = simd::active_kernels());

// Accumulates into dW, db and (if non-null) dx given dz = dL/dz.
void conv1d_backward(const double* x, std::size_t n, std::size_t dim, ConstMatrixView W,
                     std::size_t window, const double* z, const double* dz, MatrixView dW,
                     double* db, double* dx, const simd::Kernels& k = simd::active_kernels());

struct AttentionTrace {
  std::vector<double> m;        // n x dim, tanh(W v_i + b); zero rows where masked
  std::vector<double> weights;  // n; zero where masked; empty if nothing is valid
  std::vector<double> pooled;   // dim
};

// Softmax attention pooling over the rows of v (n x dim). An empty mask
// means every row is valid.
void attention_pool(const double* v, std::size_t n, std::size_t dim,
                    std::span<const std::uint8_t> mask, ConstMatrixView W, const double* b,
                    const double* w, AttentionTrace& out,
                    const simd::Kernels& k = simd::active_kernels());

// Accumulates into dW, db, dw and dv (n x dim) given dpooled.
void attention_backward(const double* v, std::size_t n, std::size_t dim,
                        std::span<const std::uint8_t> mask, ConstMatrixView W, const double* w,
                        const AttentionTrace& trace, const double* dpooled, MatrixView dW,
                        double* db, double* dw, double* dv,
                        const simd::Kernels& k = simd::active_kernels());

struct LstmWeights {
  ConstMatrixView Wi, Wf, Wc, Wo;  // hidden x input
  ConstMatrixView Ui, Uf, Uc, Uo;  // hidden x hidden
  const double *bi, *bf, *bc, *bo;
};

struct LstmGrads {
  MatrixView Wi, Wf, Wc, Wo, Ui, Uf, Uc, Uo;
  double *bi, *bf, *bc, *bo;
};

LstmWeights lstm_weights(const Params& p);
LstmGrads lstm_grads(Params& g);

// Gate activations per step, each steps x hidden. g holds the candidate
// cell c~.
struct LstmTrace {
  std::size_t steps = 0, hidden = 0;
  std::vector<double> i, f, g, c, o, h;
};

// Runs from h_0 = c_0 = 0 over s (steps x input).
void lstm_sequence(const double* s, std::size_t steps, std::size_t input, const LstmWeights& w,
                   LstmTrace& out, const simd::Kernels& k = simd::active_kernels());

// dh holds dL/dh_t from layers above (steps x hidden). Accumulates into
// grads and ds (steps x input).
void lstm_backward(const double* s, std::size_t input, const LstmWeights& w,
                   const LstmTrace& trace, const double* dh, const LstmGrads& grads, double* ds,
                   const simd::Kernels& k = simd::active_kernels());

double sigmoid(double x);

}  // namespace essayscore::nn

#endif  // ESSAYSCORE_NN_LAYERS_H_
