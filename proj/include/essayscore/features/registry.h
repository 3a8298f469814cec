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

#ifndef ESSAYSCORE_FEATURES_REGISTRY_H_
#define ESSAYSCORE_FEATURES_REGISTRY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace essayscore::features {

struct FeatureCategory {
  std::string name;
  std::vector<std::string> features;
};

// Ordered inventory of the essay-quality features. The order is frozen:
// FeatureVector values, CSV columns and checkpoint fingerprints all depend
// on it.
class FeatureRegistry {
 public:
  static const FeatureRegistry& reference();

  const std::vector<FeatureCategory>& categories() const { return categories_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t dimension() const { return names_.size(); }

  // Offset of a category's first feature in the flat vector.
  std::size_t offset_of(std::string_view category) const;

  // FNV-1a over "category:name" lines; stored in checkpoints to catch a
  // model being paired with a different feature layout.
  std::uint64_t fingerprint() const;

 private:
  explicit FeatureRegistry(std::vector<FeatureCategory> categories);

  std::vector<FeatureCategory> categories_;
  std::vector<std::string> names_;
};

inline constexpr std::size_t kLengthDim = 11;
inline constexpr std::size_t kReadabilityDim = 13;
inline constexpr std::size_t kComplexityDim = 5;
inline constexpr std::size_t kVariationDim = 53;
inline constexpr std::size_t kSentimentDim = 4;
inline constexpr std::size_t kFeatureDim =
    kLengthDim + kReadabilityDim + kComplexityDim + kVariationDim + kSentimentDim;

}  // namespace essayscore::features

#endif  // ESSAYSCORE_FEATURES_REGISTRY_H_
