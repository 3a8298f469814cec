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

#ifndef ESSAYSCORE_NN_MODEL_H_
#define ESSAYSCORE_NN_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "essayscore/common/random.h"
#include "essayscore/nn/layers.h"
#include "essayscore/nn/params.h"
#include "essayscore/simd/kernels.h"
#include "essayscore/text/essay_tensor.h"

namespace essayscore::nn {

struct SentenceTrace {
  std::vector<std::int32_t> indices;
  std::vector<double> x;  // tokens x embedding_dim
  std::vector<double> z;  // tokens x filters
  AttentionTrace attention;
};

// Intermediates of one forward pass, kept for backward. Only valid
// sentences and tokens appear.
struct ForwardTrace {
  std::vector<SentenceTrace> sentences;
  std::vector<double> s;  // sentences x filters
  LstmTrace lstm;
  AttentionTrace essay_attention;
  std::vector<double> dropout_scale;  // hidden; empty when dropout is off
  std::vector<double> e;
  double logit = 0.0;
  double yhat = 0.0;
};

// Returns y^ in (0, 1). Dropout on o needs rng. An essay without valid
// sentences gets o = 0.
double forward(const Params& params, const text::EssayTensor& essay,
               std::span<const double> features, bool dropout_on, Rng* rng, ForwardTrace& trace,
               const simd::Kernels& k = simd::active_kernels());

double predict(const Params& params, const text::EssayTensor& essay,
               std::span<const double> features,
               const simd::Kernels& k = simd::active_kernels());

// Adds dL/dtheta to grads given dy = dL/dy^.
void backward(const Params& params, const ForwardTrace& trace, double dy, Params& grads,
              const simd::Kernels& k = simd::active_kernels());

// (1/N) sum (yhat - y)^2. Throws Error for N = 0 or a length mismatch.
double mse(std::span<const double> y, std::span<const double> yhat);

struct Example {
  const text::EssayTensor* essay = nullptr;
  std::span<const double> features;
  double target = 0.0;
};

// Overwrites grads with the MSE gradient over the batch; returns the MSE.
double batch_gradients(const Params& params, std::span<const Example> batch, bool dropout_on,
                       Rng* rng, Params& grads,
                       const simd::Kernels& k = simd::active_kernels());

}  // namespace essayscore::nn

#endif  // ESSAYSCORE_NN_MODEL_H_
