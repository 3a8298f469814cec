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

#include "essayscore/metrics/qwk.h"

#include <string>

#include "essayscore/common/error.h"

namespace essayscore::metrics {

SquareMatrix build_weight_matrix(int ratings) {
  if (ratings < 2) throw Error("weight matrix needs at least 2 ratings, got " + std::to_string(ratings));
  SquareMatrix w{ratings, std::vector<double>(static_cast<std::size_t>(ratings * ratings))};
  const double denom = static_cast<double>(ratings - 1) * (ratings - 1);
  for (int i = 0; i < ratings; ++i) {
    for (int j = 0; j < ratings; ++j) w(i, j) = static_cast<double>((i - j) * (i - j)) / denom;
  }
  return w;
}

QwkComputation qwk_detail(std::span<const int> human, std::span<const int> pred, int ratings) {
  if (human.size() != pred.size()) {
    throw Error("qwk: " + std::to_string(human.size()) + " human scores but " +
                std::to_string(pred.size()) + " predictions");
  }
  if (human.empty()) throw Error("qwk: no scores");
  QwkComputation q;
  q.ratings = ratings;
  q.weights = build_weight_matrix(ratings);
  const auto cells = static_cast<std::size_t>(ratings * ratings);
  q.observed = {ratings, std::vector<double>(cells)};
  q.expected = {ratings, std::vector<double>(cells)};
  std::vector<double> hist_h(static_cast<std::size_t>(ratings)), hist_p(hist_h.size());
  for (std::size_t k = 0; k < human.size(); ++k) {
    const int h = human[k], p = pred[k];
    if (h < 0 || h >= ratings || p < 0 || p >= ratings) {
      throw DataError("qwk: score pair (" + std::to_string(h) + ", " + std::to_string(p) +
                      ") outside 0.." + std::to_string(ratings - 1));
    }
    q.observed(h, p) += 1.0;
    hist_h[static_cast<std::size_t>(h)] += 1.0;
    hist_p[static_cast<std::size_t>(p)] += 1.0;
  }
  const double n = static_cast<double>(human.size());
  double num = 0.0, den = 0.0;
  for (int i = 0; i < ratings; ++i) {
    for (int j = 0; j < ratings; ++j) {
      q.expected(i, j) = hist_h[static_cast<std::size_t>(i)] * hist_p[static_cast<std::size_t>(j)] / n;
      num += q.weights(i, j) * q.observed(i, j);
      den += q.weights(i, j) * q.expected(i, j);
    }
  }
  if (den == 0.0) {
    if (num != 0.0) throw NumericError("qwk: zero expected disagreement with off-diagonal observations");
    q.kappa = 1.0;
  } else {
    q.kappa = 1.0 - num / den;
  }
  return q;
}

double qwk(std::span<const int> human, std::span<const int> pred, const PromptMeta& meta) {
  std::vector<int> h(human.begin(), human.end()), p(pred.begin(), pred.end());
  for (int& v : h) {
    if (!meta.contains(v)) throw DataError("qwk: human score " + std::to_string(v) + " out of range");
    v -= meta.score_min;
  }
  for (int& v : p) {
    if (!meta.contains(v)) throw DataError("qwk: predicted score " + std::to_string(v) + " out of range");
    v -= meta.score_min;
  }
  return qwk_detail(h, p, meta.num_ratings()).kappa;
}

}  // namespace essayscore::metrics
