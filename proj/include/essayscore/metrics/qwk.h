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

#ifndef ESSAYSCORE_METRICS_QWK_H_
#define ESSAYSCORE_METRICS_QWK_H_

#include <span>
#include <vector>

#include "essayscore/metrics/prompt.h"

namespace essayscore::metrics {

// Row-major R x R matrix.
struct SquareMatrix {
  int size = 0;
  std::vector<double> values;

  double& operator()(int i, int j) { return values[static_cast<std::size_t>(i * size + j)]; }
  double operator()(int i, int j) const {
    return values[static_cast<std::size_t>(i * size + j)];
  }
};

// W_ij = (i - j)^2 / (R - 1)^2. Throws Error for R < 2.
SquareMatrix build_weight_matrix(int ratings);

struct QwkComputation {
  int ratings = 0;
  SquareMatrix weights;
  SquareMatrix observed;
  SquareMatrix expected;  // scaled so its total equals the observed total
  double kappa = 0.0;
};

// Scores are 0-based rating indices in [0, ratings). When the expected
// disagreement is zero (both raters constant and equal) kappa is 1 if all
// observations lie on the diagonal; anything else is an error.
QwkComputation qwk_detail(std::span<const int> human, std::span<const int> pred, int ratings);

// Raw scores within meta's range.
double qwk(std::span<const int> human, std::span<const int> pred, const PromptMeta& meta);

}  // namespace essayscore::metrics

#endif  // ESSAYSCORE_METRICS_QWK_H_
