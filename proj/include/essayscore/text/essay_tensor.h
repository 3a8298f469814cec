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

#ifndef ESSAYSCORE_TEXT_ESSAY_TENSOR_H_
#define ESSAYSCORE_TEXT_ESSAY_TENSOR_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "essayscore/text/token.h"
#include "essayscore/text/vocabulary.h"

namespace essayscore::text {

struct TensorCaps {
  std::size_t max_sentences = 100;
  std::size_t max_tokens = 50;
};

// Padded sentence x token grid of vocabulary indices. Valid cells are a
// prefix of each row and valid rows are a prefix of the grid.
struct EssayTensor {
  std::size_t max_sentences = 0;
  std::size_t max_tokens = 0;
  std::vector<std::int32_t> indices;  // max_sentences * max_tokens, row-major
  std::vector<std::uint8_t> mask;     // same shape; 1 = valid
  std::vector<std::size_t> lengths;   // valid tokens per row
  std::size_t sentence_count = 0;     // rows with at least one valid cell

  std::int32_t at(std::size_t s, std::size_t t) const {
    return indices[s * max_tokens + t];
  }
  bool valid(std::size_t s, std::size_t t) const {
    return mask[s * max_tokens + t] != 0;
  }
};

EssayTensor encode_indices(const TaggedEssay& essay, const Vocabulary& vocab,
                           const TensorCaps& caps = {});

}  // namespace essayscore::text

#endif  // ESSAYSCORE_TEXT_ESSAY_TENSOR_H_
