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

#ifndef ESSAYSCORE_HARNESS_FOLDS_H_
#define ESSAYSCORE_HARNESS_FOLDS_H_

#include <cstdint>
#include <vector>

#include "essayscore/harness/dataset.h"

namespace essayscore::harness {

// Indices into Dataset::essays.
struct FoldPlan {
  int target_prompt = 0;
  std::vector<std::size_t> train;
  std::vector<std::size_t> dev;
  std::vector<std::size_t> test;
};

// Test = every essay of the target set. The other sets are split per set:
// a seeded round(dev_fraction * n) of each goes to dev, the rest to train.
// The split depends only on (seed, target, set), not on other folds.
FoldPlan make_fold(const Dataset& dataset, int target_prompt, std::uint64_t seed,
                   double dev_fraction = 0.2);

// One plan per prompt 1..8. Throws DataError if a set has no essays.
std::vector<FoldPlan> make_folds(const Dataset& dataset, std::uint64_t seed,
                                 double dev_fraction = 0.2);

// The target essays visible for test-time normalization: a seeded
// ceil(fraction * n) of plan.test (at least one), in dataset order.
std::vector<std::size_t> visible_target_essays(const FoldPlan& plan, double fraction,
                                               std::uint64_t seed);

}  // namespace essayscore::harness

#endif  // ESSAYSCORE_HARNESS_FOLDS_H_
