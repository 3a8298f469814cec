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

#include "essayscore/nn/optimizer.h"

#include <cmath>
#include <string>

#include "essayscore/common/error.h"

namespace essayscore::nn {

RmsProp::RmsProp(const Params& shape, RmsPropOptions options)
    : options_(options), acc_(shape.flat().size(), 0.0) {}

void RmsProp::step(Params& params, const Params& grads) {
  auto theta = params.flat();
  const auto g = grads.flat();
  if (theta.size() != acc_.size() || g.size() != acc_.size()) {
    throw Error("optimizer state does not match parameter layout");
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isfinite(g[i])) {
      const Group grp = grads.group_of(i);
      throw NumericError("non-finite gradient in parameter " + std::string(group_name(grp)) +
                         " at element " + std::to_string(i - grads.offset(grp)));
    }
  }
  const double lr = options_.learning_rate, rho = options_.rho, eps = options_.epsilon;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc_[i] = rho * acc_[i] + (1.0 - rho) * g[i] * g[i];
    theta[i] -= lr * g[i] / (std::sqrt(acc_[i]) + eps);
  }
}

double clip_gradients(Params& grads, double max_norm) {
  double sq = 0.0;
  for (double v : grads.flat()) sq += v * v;
  const double norm = std::sqrt(sq);
  if (max_norm > 0.0 && norm > max_norm) {
    const double scale = max_norm / norm;
    for (double& v : grads.flat()) v *= scale;
  }
  return norm;
}

}  // namespace essayscore::nn
