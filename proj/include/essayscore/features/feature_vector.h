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

#ifndef ESSAYSCORE_FEATURES_FEATURE_VECTOR_H_
#define ESSAYSCORE_FEATURES_FEATURE_VECTOR_H_

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "essayscore/features/extractors.h"
#include "essayscore/features/registry.h"
#include "essayscore/text/token.h"

namespace essayscore::features {

struct FeatureVector {
  std::array<double, kFeatureDim> values{};
  int essay_set = 0;

  bool operator==(const FeatureVector&) const = default;
};

// All extractors concatenated in registry order.
FeatureVector assemble(const text::TaggedEssay& essay, int essay_set,
                       const Lexicons& lex = Lexicons::bundled());

// Per essay set, per feature (min, max) over the essays used to fit.
class NormalizationStats {
 public:
  using Range = std::pair<double, double>;

  static NormalizationStats fit(const std::vector<FeatureVector>& vectors);

  // (v - min) / (max - min) clamped to [0, 1]; 0 when max == min. Throws
  // DataError for a set the stats were not fitted on.
  FeatureVector apply(const FeatureVector& raw) const;

  bool has_set(int essay_set) const { return ranges_.count(essay_set) != 0; }
  const std::map<int, std::vector<Range>>& ranges() const { return ranges_; }

  // Merges another set's ranges in (used when train and test stats are
  // fitted from different essay pools).
  void merge(const NormalizationStats& other);

  static NormalizationStats from_ranges(std::map<int, std::vector<Range>> ranges);

  bool operator==(const NormalizationStats&) const = default;

 private:
  std::map<int, std::vector<Range>> ranges_;
};

}  // namespace essayscore::features

#endif  // ESSAYSCORE_FEATURES_FEATURE_VECTOR_H_
