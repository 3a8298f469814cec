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

#ifndef ESSAYSCORE_NN_OPTIMIZER_H_
#define ESSAYSCORE_NN_OPTIMIZER_H_

#include <vector>

#include "essayscore/nn/params.h"

namespace essayscore::nn {

struct RmsPropOptions {
  double learning_rate = 0.001;
  double rho = 0.9;
  double epsilon = 1e-7;
};

class RmsProp {
 public:
  explicit RmsProp(const Params& shape, RmsPropOptions options = {});

  // acc <- rho acc + (1 - rho) g^2; theta <- theta - lr g / (sqrt(acc) + eps).
  // Throws NumericError naming the group of the first non-finite gradient;
  // nothing is updated in that case.
  void step(Params& params, const Params& grads);

  const std::vector<double>& accumulators() const { return acc_; }
  const RmsPropOptions& options() const { return options_; }

 private:
  RmsPropOptions options_;
  std::vector<double> acc_;
};

// Rescales grads so their global L2 norm is at most max_norm. Returns the
// norm before clipping. max_norm <= 0 disables clipping.
double clip_gradients(Params& grads, double max_norm);

}  // namespace essayscore::nn

#endif  // ESSAYSCORE_NN_OPTIMIZER_H_
