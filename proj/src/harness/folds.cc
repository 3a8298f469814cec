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

#include "essayscore/harness/folds.h"

#include <algorithm>
#include <cmath>
#include <span>

#include "essayscore/common/error.h"
#include "essayscore/common/random.h"

namespace essayscore::harness {
namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return Rng::splitmix(Rng::splitmix(seed ^ (a * 0x100000001b3ULL)) ^ b);
}

}  // namespace

FoldPlan make_fold(const Dataset& dataset, int target_prompt, std::uint64_t seed,
                   double dev_fraction) {
  FoldPlan plan;
  plan.target_prompt = target_prompt;
  plan.test = dataset.indices_of_set(target_prompt);
  for (int set = 1; set <= 8; ++set) {
    if (set == target_prompt) continue;
    std::vector<std::size_t> idx = dataset.indices_of_set(set);
    Rng rng(mix(seed, static_cast<std::uint64_t>(target_prompt), static_cast<std::uint64_t>(set)));
    rng.shuffle(std::span<std::size_t>(idx));
    const auto n_dev = static_cast<std::size_t>(std::lround(dev_fraction * static_cast<double>(idx.size())));
    plan.dev.insert(plan.dev.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_dev));
    plan.train.insert(plan.train.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_dev), idx.end());
  }
  std::sort(plan.train.begin(), plan.train.end());
  std::sort(plan.dev.begin(), plan.dev.end());
  return plan;
}

std::vector<FoldPlan> make_folds(const Dataset& dataset, std::uint64_t seed, double dev_fraction) {
  std::vector<FoldPlan> plans;
  for (int set = 1; set <= 8; ++set) {
    if (dataset.indices_of_set(set).empty()) {
      throw DataError("essay set " + std::to_string(set) + " has no essays");
    }
    plans.push_back(make_fold(dataset, set, seed, dev_fraction));
  }
  return plans;
}

std::vector<std::size_t> visible_target_essays(const FoldPlan& plan, double fraction,
                                               std::uint64_t seed) {
  if (plan.test.empty()) return {};
  if (fraction >= 1.0) return plan.test;
  std::vector<std::size_t> idx = plan.test;
  Rng rng(mix(seed, static_cast<std::uint64_t>(plan.target_prompt), 0x5eed));
  rng.shuffle(std::span<std::size_t>(idx));
  auto n = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(idx.size())));
  n = std::clamp<std::size_t>(n, 1, idx.size());
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace essayscore::harness
