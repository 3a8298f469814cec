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

#ifndef ESSAYSCORE_METRICS_PROMPT_H_
#define ESSAYSCORE_METRICS_PROMPT_H_

#include <span>
#include <string>

namespace essayscore::metrics {

struct PromptMeta {
  int essay_set = 0;
  int score_min = 0;
  int score_max = 0;
  std::string genre;

  int num_ratings() const { return score_max - score_min + 1; }
  bool contains(int score) const { return score >= score_min && score <= score_max; }
};

// The eight ASAP prompts, indexed by essay_set - 1.
std::span<const PromptMeta> asap_prompts();

// Throws DataError for a set outside 1..8.
const PromptMeta& prompt_meta(int essay_set);

// (score - min) / (max - min). Throws DataError when score is out of range.
double scale_to_unit(int score, const PromptMeta& meta);

// Rounds half away from zero, then clamps into [min, max].
int rescale_from_unit(double y, const PromptMeta& meta);

}  // namespace essayscore::metrics

#endif  // ESSAYSCORE_METRICS_PROMPT_H_
