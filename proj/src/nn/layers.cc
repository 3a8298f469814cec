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

#include "essayscore/nn/layers.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "essayscore/common/error.h"

namespace essayscore::nn {
namespace {

bool valid_at(std::span<const std::uint8_t> mask, std::size_t i) {
  return mask.empty() || mask[i] != 0;
}

// Zero-padded receptive field of position j.
void gather_window(const double* x, std::size_t n, std::size_t dim, std::size_t window,
                   std::size_t j, double* out) {
  const std::ptrdiff_t r = static_cast<std::ptrdiff_t>(window / 2);
  for (std::size_t q = 0; q < window; ++q) {
    const std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(j) - r + static_cast<std::ptrdiff_t>(q);
    double* dst = out + q * dim;
    if (pos < 0 || pos >= static_cast<std::ptrdiff_t>(n)) {
      std::fill(dst, dst + dim, 0.0);
    } else {
      std::copy_n(x + static_cast<std::size_t>(pos) * dim, dim, dst);
    }
  }
}

}  // namespace

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

void embed(std::span<const std::int32_t> indices, ConstMatrixView E, std::vector<double>& x) {
  x.assign(indices.size() * E.cols, 0.0);
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const std::int32_t idx = indices[t];
    if (idx < 0 || static_cast<std::size_t>(idx) >= E.rows) {
      throw DataError("embedding index " + std::to_string(idx) + " outside vocabulary of " +
                      std::to_string(E.rows));
    }
    if (idx == 0) continue;
    std::copy_n(E.row(static_cast<std::size_t>(idx)), E.cols, x.data() + t * E.cols);
  }
}

void conv1d(const double* x, std::size_t n, std::size_t dim, ConstMatrixView W, const double* b,
            std::size_t window, double* z, const simd::Kernels& k) {
  std::vector<double> win(window * dim);
  for (std::size_t j = 0; j < n; ++j) {
    gather_window(x, n, dim, window, j, win.data());
    double* zj = z + j * W.rows;
    std::copy_n(b, W.rows, zj);
    k.gemv(W.data, W.rows, W.cols, win.data(), zj, true);
    for (std::size_t c = 0; c < W.rows; ++c) zj[c] = std::max(zj[c], 0.0);
  }
}

void conv1d_backward(const double* x, std::size_t n, std::size_t dim, ConstMatrixView W,
                     std::size_t window, const double* z, const double* dz, MatrixView dW,
                     double* db, double* dx, const simd::Kernels& k) {
  const std::size_t filters = W.rows;
  std::vector<double> win(window * dim), dpre(filters), dwin(window * dim);
  const std::ptrdiff_t r = static_cast<std::ptrdiff_t>(window / 2);
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t c = 0; c < filters; ++c) {
      dpre[c] = z[j * filters + c] > 0.0 ? dz[j * filters + c] : 0.0;
      any = any || dpre[c] != 0.0;
    }
    if (!any) continue;
    gather_window(x, n, dim, window, j, win.data());
    k.ger(dpre.data(), filters, win.data(), win.size(), dW.data);
    k.axpy(1.0, dpre.data(), db, filters);
    if (dx == nullptr) continue;
    std::fill(dwin.begin(), dwin.end(), 0.0);
    k.gemv_t(W.data, filters, W.cols, dpre.data(), dwin.data());
    for (std::size_t q = 0; q < window; ++q) {
      const std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(j) - r + static_cast<std::ptrdiff_t>(q);
      if (pos < 0 || pos >= static_cast<std::ptrdiff_t>(n)) continue;
      k.axpy(1.0, dwin.data() + q * dim, dx + static_cast<std::size_t>(pos) * dim, dim);
    }
  }
}

void attention_pool(const double* v, std::size_t n, std::size_t dim,
                    std::span<const std::uint8_t> mask, ConstMatrixView W, const double* b,
                    const double* w, AttentionTrace& out, const simd::Kernels& k) {
  out.m.assign(n * W.rows, 0.0);
  out.pooled.assign(dim, 0.0);
  out.weights.assign(n, 0.0);
  double best = -INFINITY;
  std::size_t valid = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_at(mask, i)) continue;
    ++valid;
    double* mi = out.m.data() + i * W.rows;
    std::copy_n(b, W.rows, mi);
    k.gemv(W.data, W.rows, W.cols, v + i * dim, mi, true);
    for (std::size_t c = 0; c < W.rows; ++c) mi[c] = std::tanh(mi[c]);
    out.weights[i] = k.dot(w, mi, W.rows);
    best = std::max(best, out.weights[i]);
  }
  if (valid == 0) {
    out.weights.clear();
    return;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_at(mask, i)) continue;
    out.weights[i] = std::exp(out.weights[i] - best);
    total += out.weights[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_at(mask, i)) continue;
    out.weights[i] /= total;
    k.axpy(out.weights[i], v + i * dim, out.pooled.data(), dim);
  }
}

void attention_backward(const double* v, std::size_t n, std::size_t dim,
                        std::span<const std::uint8_t> mask, ConstMatrixView W, const double* w,
                        const AttentionTrace& trace, const double* dpooled, MatrixView dW,
                        double* db, double* dw, double* dv, const simd::Kernels& k) {
  if (trace.weights.empty()) return;
  const std::size_t a = W.rows;
  // d weight_i = dpooled . v_i; softmax backward gives d score_i.
  std::vector<double> dweight(n, 0.0);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_at(mask, i)) continue;
    dweight[i] = k.dot(dpooled, v + i * dim, dim);
    mean += trace.weights[i] * dweight[i];
  }
  std::vector<double> dpre(a);
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_at(mask, i)) continue;
    const double alpha = trace.weights[i];
    k.axpy(alpha, dpooled, dv + i * dim, dim);
    const double dscore = alpha * (dweight[i] - mean);
    const double* mi = trace.m.data() + i * a;
    k.axpy(dscore, mi, dw, a);
    for (std::size_t c = 0; c < a; ++c) dpre[c] = dscore * w[c] * (1.0 - mi[c] * mi[c]);
    k.ger(dpre.data(), a, v + i * dim, dim, dW.data);
    k.axpy(1.0, dpre.data(), db, a);
    k.gemv_t(W.data, a, dim, dpre.data(), dv + i * dim);
  }
}

LstmWeights lstm_weights(const Params& p) {
  return {p.view(Group::kWi), p.view(Group::kWf), p.view(Group::kWc), p.view(Group::kWo),
          p.view(Group::kUi), p.view(Group::kUf), p.view(Group::kUc), p.view(Group::kUo),
          p.view(Group::kBi).data, p.view(Group::kBf).data, p.view(Group::kBc).data,
          p.view(Group::kBo).data};
}

LstmGrads lstm_grads(Params& g) {
  return {g.view(Group::kWi), g.view(Group::kWf), g.view(Group::kWc), g.view(Group::kWo),
          g.view(Group::kUi), g.view(Group::kUf), g.view(Group::kUc), g.view(Group::kUo),
          g.view(Group::kBi).data, g.view(Group::kBf).data, g.view(Group::kBc).data,
          g.view(Group::kBo).data};
}

void lstm_sequence(const double* s, std::size_t steps, std::size_t input, const LstmWeights& w,
                   LstmTrace& out, const simd::Kernels& k) {
  const std::size_t h = w.Wi.rows;
  out.steps = steps;
  out.hidden = h;
  for (auto* v : {&out.i, &out.f, &out.g, &out.c, &out.o, &out.h}) v->assign(steps * h, 0.0);
  const std::vector<double> zero(h, 0.0);
  auto affine = [&](ConstMatrixView W, ConstMatrixView U, const double* b, const double* x,
                    const double* hp, double* dst) {
    std::copy_n(b, h, dst);
    k.gemv(W.data, h, input, x, dst, true);
    k.gemv(U.data, h, h, hp, dst, true);
  };
  for (std::size_t t = 0; t < steps; ++t) {
    const double* x = s + t * input;
    const double* hp = t == 0 ? zero.data() : out.h.data() + (t - 1) * h;
    const double* cp = t == 0 ? zero.data() : out.c.data() + (t - 1) * h;
    double* it = out.i.data() + t * h;
    double* ft = out.f.data() + t * h;
    double* gt = out.g.data() + t * h;
    double* ot = out.o.data() + t * h;
    double* ct = out.c.data() + t * h;
    double* ht = out.h.data() + t * h;
    affine(w.Wi, w.Ui, w.bi, x, hp, it);
    affine(w.Wf, w.Uf, w.bf, x, hp, ft);
    affine(w.Wc, w.Uc, w.bc, x, hp, gt);
    affine(w.Wo, w.Uo, w.bo, x, hp, ot);
    for (std::size_t j = 0; j < h; ++j) {
      it[j] = sigmoid(it[j]);
      ft[j] = sigmoid(ft[j]);
      gt[j] = std::tanh(gt[j]);
      ot[j] = sigmoid(ot[j]);
      ct[j] = it[j] * gt[j] + ft[j] * cp[j];
      ht[j] = ot[j] * std::tanh(ct[j]);
    }
  }
}

void lstm_backward(const double* s, std::size_t input, const LstmWeights& w,
                   const LstmTrace& trace, const double* dh, const LstmGrads& grads, double* ds,
                   const simd::Kernels& k) {
  const std::size_t h = trace.hidden;
  std::vector<double> dh_next(h, 0.0), dc_next(h, 0.0), dh_t(h), dc(h);
  std::vector<double> dai(h), daf(h), dag(h), dao(h);
  const std::vector<double> zero(h, 0.0);
  for (std::size_t t = trace.steps; t-- > 0;) {
    const double* x = s + t * input;
    const double* hp = t == 0 ? zero.data() : trace.h.data() + (t - 1) * h;
    const double* cp = t == 0 ? zero.data() : trace.c.data() + (t - 1) * h;
    const double* it = trace.i.data() + t * h;
    const double* ft = trace.f.data() + t * h;
    const double* gt = trace.g.data() + t * h;
    const double* ot = trace.o.data() + t * h;
    const double* ct = trace.c.data() + t * h;
    for (std::size_t j = 0; j < h; ++j) {
      const double d = dh[t * h + j] + dh_next[j];
      const double tc = std::tanh(ct[j]);
      dao[j] = d * tc * ot[j] * (1.0 - ot[j]);
      dc[j] = dc_next[j] + d * ot[j] * (1.0 - tc * tc);
      dai[j] = dc[j] * gt[j] * it[j] * (1.0 - it[j]);
      dag[j] = dc[j] * it[j] * (1.0 - gt[j] * gt[j]);
      daf[j] = dc[j] * cp[j] * ft[j] * (1.0 - ft[j]);
      dc_next[j] = dc[j] * ft[j];
    }
    std::fill(dh_next.begin(), dh_next.end(), 0.0);
    auto gate = [&](const std::vector<double>& da, ConstMatrixView W, ConstMatrixView U,
                    MatrixView dW, MatrixView dU, double* db) {
      k.ger(da.data(), h, x, input, dW.data);
      k.ger(da.data(), h, hp, h, dU.data);
      k.axpy(1.0, da.data(), db, h);
      k.gemv_t(W.data, h, input, da.data(), ds + t * input);
      k.gemv_t(U.data, h, h, da.data(), dh_next.data());
    };
    gate(dai, w.Wi, w.Ui, grads.Wi, grads.Ui, grads.bi);
    gate(daf, w.Wf, w.Uf, grads.Wf, grads.Uf, grads.bf);
    gate(dag, w.Wc, w.Uc, grads.Wc, grads.Uc, grads.bc);
    gate(dao, w.Wo, w.Uo, grads.Wo, grads.Uo, grads.bo);
  }
}

}  // namespace essayscore::nn
