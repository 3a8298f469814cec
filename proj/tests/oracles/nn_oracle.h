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

#ifndef ESSAYSCORE_TESTS_ORACLES_NN_ORACLE_H_
#define ESSAYSCORE_TESTS_ORACLES_NN_ORACLE_H_

// Straight-line reference evaluation of the scoring network with nested
// vectors and plain loops. Shares no code with the library.

#include <cmath>
#include <cstddef>
#include <vector>

namespace essayscore::oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

struct RefNet {
  std::size_t window = 5;
  Mat E;           // V x D
  Mat Wz;          // F x (window * D)
  Vec bz;
  Mat Wm;          // F x F
  Vec bm, wu;
  Mat Wi, Wf, Wc, Wo;  // H x F
  Mat Ui, Uf, Uc, Uo;  // H x H
  Vec bi, bf, bc, bo;
  Mat Wa;          // H x H
  Vec ba, walpha;
  Vec wy;          // H + features
  double by = 0.0;
};

inline double ref_sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline Vec matvec(const Mat& A, const Vec& x) {
  Vec y(A.size(), 0.0);
  for (std::size_t r = 0; r < A.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += A[r][c] * x[c];
  }
  return y;
}

// Softmax attention over rows; returns the pooled vector.
inline Vec ref_attend(const Mat& rows, const Mat& W, const Vec& b, const Vec& w,
                      Vec* weights_out = nullptr) {
  const std::size_t n = rows.size();
  Vec score(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec m = matvec(W, rows[i]);
    double s = 0.0;
    for (std::size_t c = 0; c < m.size(); ++c) s += w[c] * std::tanh(m[c] + b[c]);
    score[i] = s;
  }
  double total = 0.0;
  Vec weight(n);
  for (std::size_t i = 0; i < n; ++i) total += std::exp(score[i]);
  for (std::size_t i = 0; i < n; ++i) weight[i] = std::exp(score[i]) / total;
  Vec pooled(n == 0 ? 0 : rows[0].size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < pooled.size(); ++c) pooled[c] += weight[i] * rows[i][c];
  }
  if (weights_out) *weights_out = weight;
  return pooled;
}

// sentences hold vocabulary indices of valid tokens only. dropout_scale,
// when non-empty, multiplies o element-wise.
inline double ref_forward(const RefNet& net, const std::vector<std::vector<int>>& sentences,
                          const Vec& features, const Vec& dropout_scale = {}) {
  const std::size_t D = net.E.empty() ? 0 : net.E[0].size();
  const std::size_t F = net.Wz.size();
  const std::size_t H = net.Wi.size();
  const long r = static_cast<long>(net.window / 2);
  Mat s_vectors;
  for (const auto& sent : sentences) {
    const long n = static_cast<long>(sent.size());
    Mat z;
    for (long j = 0; j < n; ++j) {
      Vec window;
      for (long q = -r; q <= r; ++q) {
        const long pos = j + q;
        for (std::size_t d = 0; d < D; ++d) {
          window.push_back(pos < 0 || pos >= n ? 0.0 : net.E[static_cast<std::size_t>(sent[static_cast<std::size_t>(pos)])][d]);
        }
      }
      Vec zj(F);
      for (std::size_t c = 0; c < F; ++c) {
        double a = net.bz[c];
        for (std::size_t k = 0; k < window.size(); ++k) a += net.Wz[c][k] * window[k];
        zj[c] = a > 0.0 ? a : 0.0;
      }
      z.push_back(zj);
    }
    s_vectors.push_back(ref_attend(z, net.Wm, net.bm, net.wu));
  }
  Vec h(H, 0.0), c(H, 0.0);
  Mat hs;
  for (const Vec& s : s_vectors) {
    const Vec xi = matvec(net.Wi, s), xf = matvec(net.Wf, s), xc = matvec(net.Wc, s),
              xo = matvec(net.Wo, s);
    const Vec hi = matvec(net.Ui, h), hf = matvec(net.Uf, h), hc = matvec(net.Uc, h),
              ho = matvec(net.Uo, h);
    Vec hn(H), cn(H);
    for (std::size_t j = 0; j < H; ++j) {
      const double it = ref_sigmoid(xi[j] + hi[j] + net.bi[j]);
      const double ft = ref_sigmoid(xf[j] + hf[j] + net.bf[j]);
      const double gt = std::tanh(xc[j] + hc[j] + net.bc[j]);
      const double ot = ref_sigmoid(xo[j] + ho[j] + net.bo[j]);
      cn[j] = it * gt + ft * c[j];
      hn[j] = ot * std::tanh(cn[j]);
    }
    h = hn;
    c = cn;
    hs.push_back(h);
  }
  Vec o = hs.empty() ? Vec(H, 0.0) : ref_attend(hs, net.Wa, net.ba, net.walpha);
  if (!dropout_scale.empty()) {
    for (std::size_t j = 0; j < H; ++j) o[j] *= dropout_scale[j];
  }
  double logit = net.by;
  for (std::size_t j = 0; j < H; ++j) logit += net.wy[j] * o[j];
  for (std::size_t j = 0; j < features.size(); ++j) logit += net.wy[H + j] * features[j];
  return ref_sigmoid(logit);
}

}  // namespace essayscore::oracle

#endif  // ESSAYSCORE_TESTS_ORACLES_NN_ORACLE_H_
