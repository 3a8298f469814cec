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

#ifndef ESSAYSCORE_HARNESS_CONFIG_H_
#define ESSAYSCORE_HARNESS_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "essayscore/nn/params.h"
#include "essayscore/text/essay_tensor.h"
#include "essayscore/text/vocabulary.h"

namespace essayscore::harness {

struct RunConfig {
  text::EmbeddingMode mode = text::EmbeddingMode::kPos;
  bool use_features = true;
  std::uint64_t seed = 1;
  std::size_t batch = 16;
  std::size_t epochs = 60;
  double subsample = 1.0;  // fraction of target-prompt essays visible for test-time normalization
  std::string out_dir;
  text::TensorCaps caps;
  std::size_t embedding_dim = 50;
  std::size_t filters = 100;
  std::size_t window = 5;
  std::size_t hidden = 100;
  double dropout = 0.5;
  double clip = 0.0;  // global gradient-norm clip; 0 = off
  double learning_rate = 0.001;
  double dev_fraction = 0.2;
  int word_min_count = 2;

  // Throws Error for out-of-range settings.
  void validate() const;

  nn::ModelConfig model_config(std::size_t vocab_size) const;

  // Flag-style keys in a fixed order, for logs and checkpoints.
  std::vector<std::pair<std::string, std::string>> key_values() const;

  // Inverse of key_values() for one entry. Returns false for an unknown
  // key; throws Error for a malformed value.
  bool set(std::string_view key, std::string_view value);
};

}  // namespace essayscore::harness

#endif  // ESSAYSCORE_HARNESS_CONFIG_H_
