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

#ifndef ESSAYSCORE_TESTS_ORACLES_NN_FIXTURES_H_
#define ESSAYSCORE_TESTS_ORACLES_NN_FIXTURES_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "essayscore/common/random.h"
#include "essayscore/nn/model.h"
#include "essayscore/nn/params.h"
#include "essayscore/text/essay_tensor.h"
#include "nn_oracle.h"

namespace essayscore::testing {

using Sentences = std::vector<std::vector<int>>;

inline text::EssayTensor make_tensor(const Sentences& sentences, std::size_t max_sentences,
                                     std::size_t max_tokens) {
  text::EssayTensor t;
  t.max_sentences = max_sentences;
  t.max_tokens = max_tokens;
  t.indices.assign(max_sentences * max_tokens, 0);
  t.mask.assign(max_sentences * max_tokens, 0);
  t.lengths.assign(max_sentences, 0);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (std::size_t k = 0; k < sentences[s].size(); ++k) {
      t.indices[s * max_tokens + k] = sentences[s][k];
      t.mask[s * max_tokens + k] = 1;
    }
    t.lengths[s] = sentences[s].size();
  }
  t.sentence_count = sentences.size();
  return t;
}

// Random non-PAD indices; sentence lengths in [1, max_tokens].
inline Sentences random_sentences(Rng& rng, std::size_t count, std::size_t max_tokens,
                                  std::size_t vocab, bool ragged) {
  Sentences out(count);
  for (auto& s : out) {
    const std::size_t len = ragged ? 1 + rng.below(max_tokens) : max_tokens;
    for (std::size_t k = 0; k < len; ++k) s.push_back(1 + static_cast<int>(rng.below(vocab - 1)));
  }
  return out;
}

// Every entry U(-scale, scale), keeping the PAD row zero.
inline void randomize(nn::Params& p, Rng& rng, double scale) {
  for (double& v : p.flat()) v = rng.uniform(-scale, scale);
  auto E = p.view(nn::Group::kE);
  for (std::size_t c = 0; c < E.cols; ++c) {
    if (E.rows > 0) E(0, c) = 0.0;
  }
}

inline oracle::RefNet to_ref(const nn::Params& p) {
  using nn::Group;
  auto mat = [&p](Group g) {
    const auto v = p.view(g);
    oracle::Mat m(v.rows, oracle::Vec(v.cols));
    for (std::size_t r = 0; r < v.rows; ++r) {
      for (std::size_t c = 0; c < v.cols; ++c) m[r][c] = v(r, c);
    }
    return m;
  };
  auto vec = [&p](Group g) {
    const auto s = p.span(g);
    return oracle::Vec(s.begin(), s.end());
  };
  oracle::RefNet n;
  n.window = p.config().window;
  n.E = mat(Group::kE);
  n.Wz = mat(Group::kWz);
  n.bz = vec(Group::kBz);
  n.Wm = mat(Group::kWm);
  n.bm = vec(Group::kBm);
  n.wu = vec(Group::kWu);
  n.Wi = mat(Group::kWi);
  n.Wf = mat(Group::kWf);
  n.Wc = mat(Group::kWc);
  n.Wo = mat(Group::kWo);
  n.Ui = mat(Group::kUi);
  n.Uf = mat(Group::kUf);
  n.Uc = mat(Group::kUc);
  n.Uo = mat(Group::kUo);
  n.bi = vec(Group::kBi);
  n.bf = vec(Group::kBf);
  n.bc = vec(Group::kBc);
  n.bo = vec(Group::kBo);
  n.Wa = mat(Group::kWa);
  n.ba = vec(Group::kBa);
  n.walpha = vec(Group::kWalpha);
  n.wy = vec(Group::kWy);
  n.by = p.span(Group::kBy)[0];
  return n;
}

// One sentence of two tokens (indices 1, 2), embedding 2, 2 filters,
// window 3, hidden 2, 2 features. Values picked by hand.
inline nn::Params hand_micro_network() {
  nn::ModelConfig c;
  c.vocab_size = 3;
  c.embedding_dim = 2;
  c.filters = 2;
  c.window = 3;
  c.hidden = 2;
  c.feature_dim = 2;
  nn::Params p(c);
  auto fill = [&p](nn::Group g, const std::vector<double>& v) {
    std::copy(v.begin(), v.end(), p.span(g).begin());
  };
  fill(nn::Group::kE, {0, 0, 0.1, -0.2, 0.3, 0.4});
  fill(nn::Group::kWz, {0.5, -0.1, 0.2, 0.3, -0.4, 0.1, -0.2, 0.6, 0.1, 0.2, -0.3, 0.5});
  fill(nn::Group::kBz, {0.05, 0.1});
  fill(nn::Group::kWm, {0.3, -0.2, 0.4, 0.1});
  fill(nn::Group::kBm, {0.0, 0.1});
  fill(nn::Group::kWu, {0.7, -0.5});
  fill(nn::Group::kWi, {0.2, 0.1, -0.3, 0.4});
  fill(nn::Group::kWf, {0.1, -0.1, 0.2, 0.2});
  fill(nn::Group::kWc, {0.5, 0.3, -0.2, 0.1});
  fill(nn::Group::kWo, {-0.1, 0.4, 0.3, 0.2});
  fill(nn::Group::kUi, {0.1, 0.0, 0.0, 0.1});
  fill(nn::Group::kUf, {0.2, 0.1, 0.1, 0.2});
  fill(nn::Group::kUc, {0.3, -0.1, 0.2, 0.0});
  fill(nn::Group::kUo, {0.0, 0.2, -0.2, 0.1});
  fill(nn::Group::kBi, {0.0, 0.1});
  fill(nn::Group::kBf, {1.0, 1.0});
  fill(nn::Group::kBc, {0.0, -0.1});
  fill(nn::Group::kBo, {0.1, 0.0});
  fill(nn::Group::kWa, {0.4, 0.2, -0.1, 0.3});
  fill(nn::Group::kBa, {0.0, 0.05});
  fill(nn::Group::kWalpha, {0.6, 0.4});
  fill(nn::Group::kWy, {1.5, -0.8, 0.9, -0.4});
  fill(nn::Group::kBy, {0.2});
  return p;
}

struct GradientCheck {
  std::array<double, nn::kNumGroups> relative_error{};  // per group, norm-wise
  std::array<double, nn::kNumGroups> max_element_error{};
  std::array<bool, nn::kNumGroups> present{};
};

// Reverse-mode gradients of the batch MSE against central differences.
// With dropout on, each evaluation reseeds the generator so the mask is
// the same.
inline GradientCheck check_gradients(const nn::Params& params,
                                     const std::vector<nn::Example>& batch, bool dropout_on,
                                     std::uint64_t dropout_seed, double h = 1e-5) {
  nn::Params analytic(params.config());
  {
    Rng rng(dropout_seed);
    nn::batch_gradients(params, batch, dropout_on, &rng, analytic);
  }
  auto loss = [&](const nn::Params& p) {
    Rng rng(dropout_seed);
    nn::Params scratch(p.config());
    return nn::batch_gradients(p, batch, dropout_on, &rng, scratch);
  };
  nn::Params probe = params;
  GradientCheck out;
  for (std::size_t gi = 0; gi < nn::kNumGroups; ++gi) {
    const auto g = nn::group_from_index(gi);
    const std::size_t n = params.size(g);
    if (n == 0) continue;
    out.present[gi] = true;
    double diff_sq = 0.0, a_sq = 0.0, n_sq = 0.0, worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx = params.offset(g) + k;
      const double orig = probe.flat()[idx];
      probe.flat()[idx] = orig + h;
      const double up = loss(probe);
      probe.flat()[idx] = orig - h;
      const double down = loss(probe);
      probe.flat()[idx] = orig;
      const double numeric = (up - down) / (2.0 * h);
      const double a = analytic.flat()[idx];
      diff_sq += (a - numeric) * (a - numeric);
      a_sq += a * a;
      n_sq += numeric * numeric;
      const double scale = std::max({std::abs(a), std::abs(numeric), 1e-6});
      worst = std::max(worst, std::abs(a - numeric) / scale);
    }
    const double denom = std::max(std::sqrt(std::max(a_sq, n_sq)), 1e-12);
    out.relative_error[gi] = std::sqrt(diff_sq) / denom;
    out.max_element_error[gi] = worst;
  }
  return out;
}

}  // namespace essayscore::testing

#endif  // ESSAYSCORE_TESTS_ORACLES_NN_FIXTURES_H_
