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

#include "essayscore/metrics/prompt.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "essayscore/common/error.h"

namespace essayscore::metrics {

std::span<const PromptMeta> asap_prompts() {
  static const std::array<PromptMeta, 8> prompts = {{
      {1, 2, 12, "ARG"},
      {2, 1, 6, "ARG"},
      {3, 0, 3, "RES"},
      {4, 0, 3, "RES"},
      {5, 0, 4, "RES"},
      {6, 0, 4, "RES"},
      {7, 0, 30, "NAR"},
      {8, 0, 60, "NAR"},
  }};
  return prompts;
}

const PromptMeta& prompt_meta(int essay_set) {
  if (essay_set < 1 || essay_set > 8) {
    throw DataError("essay_set " + std::to_string(essay_set) + " is not in 1..8");
  }
  return asap_prompts()[static_cast<std::size_t>(essay_set - 1)];
}

double scale_to_unit(int score, const PromptMeta& meta) {
  if (!meta.contains(score)) {
    throw DataError("score " + std::to_string(score) + " outside range " +
                    std::to_string(meta.score_min) + ".." + std::to_string(meta.score_max) +
                    " of essay set " + std::to_string(meta.essay_set));
  }
  return static_cast<double>(score - meta.score_min) /
         static_cast<double>(meta.score_max - meta.score_min);
}

int rescale_from_unit(double y, const PromptMeta& meta) {
  if (std::isnan(y)) throw NumericError("cannot rescale NaN prediction");
  const double raw = meta.score_min + y * (meta.score_max - meta.score_min);
  // std::round is half-away-from-zero.
  const double r = std::round(std::clamp(raw, double(meta.score_min), double(meta.score_max)));
  return static_cast<int>(r);
}

}  // namespace essayscore::metrics
