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

#include "essayscore/features/feature_vector.h"

#include <algorithm>
#include <cmath>

#include "essayscore/common/error.h"

namespace essayscore::features {

FeatureVector assemble(const text::TaggedEssay& essay, int essay_set,
                       const Lexicons& lex) {
  FeatureVector fv;
  fv.essay_set = essay_set;
  auto out = fv.values.begin();
  auto put = [&out](const auto& block) { out = std::copy(block.begin(), block.end(), out); };
  put(extract_length(essay));
  put(extract_readability(essay, lex));
  put(extract_complexity(essay));
  put(extract_variation(essay, lex));
  put(extract_sentiment(essay, lex));
  for (double v : fv.values) {
    if (!std::isfinite(v)) throw NumericError("non-finite feature value");
  }
  return fv;
}

NormalizationStats NormalizationStats::fit(const std::vector<FeatureVector>& vectors) {
  NormalizationStats stats;
  for (const auto& v : vectors) {
    auto [it, fresh] = stats.ranges_.try_emplace(v.essay_set);
    auto& ranges = it->second;
    if (fresh) {
      ranges.resize(kFeatureDim);
      for (std::size_t i = 0; i < kFeatureDim; ++i) ranges[i] = {v.values[i], v.values[i]};
      continue;
    }
    for (std::size_t i = 0; i < kFeatureDim; ++i) {
      ranges[i].first = std::min(ranges[i].first, v.values[i]);
      ranges[i].second = std::max(ranges[i].second, v.values[i]);
    }
  }
  return stats;
}

FeatureVector NormalizationStats::apply(const FeatureVector& raw) const {
  auto it = ranges_.find(raw.essay_set);
  if (it == ranges_.end()) {
    throw DataError("no normalization stats for essay set " +
                    std::to_string(raw.essay_set));
  }
  FeatureVector out;
  out.essay_set = raw.essay_set;
  for (std::size_t i = 0; i < kFeatureDim; ++i) {
    const auto [lo, hi] = it->second[i];
    out.values[i] = hi > lo ? std::clamp((raw.values[i] - lo) / (hi - lo), 0.0, 1.0) : 0.0;
  }
  return out;
}

void NormalizationStats::merge(const NormalizationStats& other) {
  for (const auto& [set, ranges] : other.ranges_) ranges_[set] = ranges;
}

NormalizationStats NormalizationStats::from_ranges(std::map<int, std::vector<Range>> ranges) {
  for (const auto& [set, r] : ranges) {
    if (r.size() != kFeatureDim) {
      throw DataError("normalization stats for set " + std::to_string(set) +
                      " have " + std::to_string(r.size()) + " features");
    }
    for (const auto& [lo, hi] : r) {
      if (!(lo <= hi)) throw DataError("normalization range with min > max");
    }
  }
  NormalizationStats stats;
  stats.ranges_ = std::move(ranges);
  return stats;
}

}  // namespace essayscore::features
