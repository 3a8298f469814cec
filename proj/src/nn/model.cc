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

#include "essayscore/nn/model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "essayscore/common/error.h"

namespace essayscore::nn {

double forward(const Params& params, const text::EssayTensor& essay,
               std::span<const double> features, bool dropout_on, Rng* rng, ForwardTrace& trace,
               const simd::Kernels& k) {
  const ModelConfig& cfg = params.config();
  if (features.size() != cfg.feature_dim) {
    throw Error("expected " + std::to_string(cfg.feature_dim) + " features, got " +
                std::to_string(features.size()));
  }
  trace.e.assign(cfg.output_dim(), 0.0);
  trace.dropout_scale.clear();
  if (cfg.use_sequence) {
    const std::size_t f = cfg.filters, h = cfg.hidden, d = cfg.embedding_dim;
    const std::size_t n_sent = essay.sentence_count;
    trace.sentences.resize(n_sent);
    trace.s.assign(n_sent * f, 0.0);
    for (std::size_t si = 0; si < n_sent; ++si) {
      SentenceTrace& st = trace.sentences[si];
      const std::size_t len = essay.lengths[si];
      const auto* row = essay.indices.data() + si * essay.max_tokens;
      st.indices.assign(row, row + len);
      embed(st.indices, params.view(Group::kE), st.x);
      st.z.assign(len * f, 0.0);
      conv1d(st.x.data(), len, d, params.view(Group::kWz), params.view(Group::kBz).data,
             cfg.window, st.z.data(), k);
      attention_pool(st.z.data(), len, f, {}, params.view(Group::kWm),
                     params.view(Group::kBm).data, params.view(Group::kWu).data, st.attention, k);
      std::copy(st.attention.pooled.begin(), st.attention.pooled.end(), trace.s.begin() + si * f);
    }
    lstm_sequence(trace.s.data(), n_sent, f, lstm_weights(params), trace.lstm, k);
    attention_pool(trace.lstm.h.data(), n_sent, h, {}, params.view(Group::kWa),
                   params.view(Group::kBa).data, params.view(Group::kWalpha).data,
                   trace.essay_attention, k);
    std::copy(trace.essay_attention.pooled.begin(), trace.essay_attention.pooled.end(),
              trace.e.begin());
    if (dropout_on && cfg.dropout > 0.0) {
      if (rng == nullptr) throw Error("dropout needs a random source");
      const double keep = 1.0 - cfg.dropout;
      trace.dropout_scale.resize(h);
      for (std::size_t j = 0; j < h; ++j) {
        trace.dropout_scale[j] = rng->uniform() < keep ? 1.0 / keep : 0.0;
        trace.e[j] *= trace.dropout_scale[j];
      }
    }
  }
  std::copy(features.begin(), features.end(), trace.e.end() - static_cast<std::ptrdiff_t>(features.size()));
  trace.logit = k.dot(params.view(Group::kWy).data, trace.e.data(), trace.e.size()) +
                params.view(Group::kBy).data[0];
  trace.yhat = sigmoid(trace.logit);
  return trace.yhat;
}

double predict(const Params& params, const text::EssayTensor& essay,
               std::span<const double> features, const simd::Kernels& k) {
  ForwardTrace trace;
  return forward(params, essay, features, false, nullptr, trace, k);
}

void backward(const Params& params, const ForwardTrace& trace, double dy, Params& grads,
              const simd::Kernels& k) {
  const ModelConfig& cfg = params.config();
  const double dlogit = dy * trace.yhat * (1.0 - trace.yhat);
  if (dlogit == 0.0) return;
  k.axpy(dlogit, trace.e.data(), grads.view(Group::kWy).data, trace.e.size());
  grads.view(Group::kBy).data[0] += dlogit;
  if (!cfg.use_sequence) return;
  const std::size_t f = cfg.filters, h = cfg.hidden, d = cfg.embedding_dim;
  const std::size_t n_sent = trace.sentences.size();
  if (n_sent == 0) return;

  std::vector<double> d_o(h);
  const double* wy = params.view(Group::kWy).data;
  for (std::size_t j = 0; j < h; ++j) {
    d_o[j] = dlogit * wy[j];
    if (!trace.dropout_scale.empty()) d_o[j] *= trace.dropout_scale[j];
  }
  std::vector<double> dh(n_sent * h, 0.0);
  attention_backward(trace.lstm.h.data(), n_sent, h, {}, params.view(Group::kWa),
                     params.view(Group::kWalpha).data, trace.essay_attention, d_o.data(),
                     grads.view(Group::kWa), grads.view(Group::kBa).data,
                     grads.view(Group::kWalpha).data, dh.data(), k);
  std::vector<double> ds(n_sent * f, 0.0);
  lstm_backward(trace.s.data(), f, lstm_weights(params), trace.lstm, dh.data(), lstm_grads(grads),
                ds.data(), k);

  MatrixView dE = grads.view(Group::kE);
  std::vector<double> dz, dx;
  for (std::size_t si = 0; si < n_sent; ++si) {
    const SentenceTrace& st = trace.sentences[si];
    const std::size_t len = st.indices.size();
    dz.assign(len * f, 0.0);
    attention_backward(st.z.data(), len, f, {}, params.view(Group::kWm),
                       params.view(Group::kWu).data, st.attention, ds.data() + si * f,
                       grads.view(Group::kWm), grads.view(Group::kBm).data,
                       grads.view(Group::kWu).data, dz.data(), k);
    dx.assign(len * d, 0.0);
    conv1d_backward(st.x.data(), len, d, params.view(Group::kWz), cfg.window, st.z.data(),
                    dz.data(), grads.view(Group::kWz), grads.view(Group::kBz).data, dx.data(), k);
    for (std::size_t t = 0; t < len; ++t) {
      const std::int32_t idx = st.indices[t];
      if (idx == text::Vocabulary::kPad) continue;  // PAD row stays frozen
      k.axpy(1.0, dx.data() + t * d, dE.row(static_cast<std::size_t>(idx)), d);
    }
  }
}

double mse(std::span<const double> y, std::span<const double> yhat) {
  if (y.size() != yhat.size()) throw Error("mse: length mismatch");
  if (y.empty()) throw Error("mse: empty batch");
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) total += (yhat[i] - y[i]) * (yhat[i] - y[i]);
  return total / static_cast<double>(y.size());
}

double batch_gradients(const Params& params, std::span<const Example> batch, bool dropout_on,
                       Rng* rng, Params& grads, const simd::Kernels& k) {
  if (batch.empty()) throw Error("empty batch");
  grads.zero();
  ForwardTrace trace;
  const double n = static_cast<double>(batch.size());
  double loss = 0.0;
  for (const Example& ex : batch) {
    const double yhat = forward(params, *ex.essay, ex.features, dropout_on, rng, trace, k);
    const double diff = yhat - ex.target;
    loss += diff * diff;
    backward(params, trace, 2.0 * diff / n, grads, k);
  }
  return loss / n;
}

}  // namespace essayscore::nn
