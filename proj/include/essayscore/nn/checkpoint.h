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

#ifndef ESSAYSCORE_NN_CHECKPOINT_H_
#define ESSAYSCORE_NN_CHECKPOINT_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "essayscore/features/feature_vector.h"
#include "essayscore/nn/params.h"
#include "essayscore/text/vocabulary.h"

namespace essayscore::nn {

// Everything needed to score essays with a trained model.
struct Checkpoint {
  Params params;
  text::Vocabulary vocabulary;
  std::uint64_t registry_fingerprint = 0;
  features::NormalizationStats normalization;
  // Run configuration echo and training metadata, in insertion order.
  std::vector<std::pair<std::string, std::string>> metadata;

  bool operator==(const Checkpoint&) const = default;
};

// Binary container: magic, version, config, vocabulary, registry hash,
// normalization ranges, metadata, then each parameter group as name,
// rows, cols and little-endian binary64 values. An FNV-1a 64 trailer
// covers all preceding bytes.
std::string serialize_checkpoint(const Checkpoint& ckpt);
Checkpoint parse_checkpoint(const std::string& bytes);

void save_checkpoint(const std::string& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace essayscore::nn

#endif  // ESSAYSCORE_NN_CHECKPOINT_H_
