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

#ifndef ESSAYSCORE_TEXT_VOCABULARY_H_
#define ESSAYSCORE_TEXT_VOCABULARY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "essayscore/text/token.h"

namespace essayscore::text {

enum class EmbeddingMode { kPos, kWord, kNone };

std::string_view to_string(EmbeddingMode mode);
EmbeddingMode parse_embedding_mode(std::string_view name);

// Dense index space for the embedding lookup. Index 0 is PAD, index 1 is
// UNK; real entries start at 2.
class Vocabulary {
 public:
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kUnk = 1;

  // PAD, UNK, then the 45 tags in kPennTags order.
  static Vocabulary pos_tags();

  // Lower-cased word types seen at least `min_count` times, sorted by
  // descending count then lexicographically.
  static Vocabulary words(const std::vector<const TaggedEssay*>& essays,
                          int min_count = 2);

  static Vocabulary from_entries(EmbeddingMode mode,
                                 std::vector<std::string> entries);

  EmbeddingMode mode() const { return mode_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::string>& entries() const { return entries_; }

  std::int32_t index_of(std::string_view key) const;

  // Key used for a token in this vocabulary: its tag name in pos mode, its
  // lower-cased surface in word mode.
  std::string key_for(const TaggedSentence& sentence, std::size_t i) const;

  bool operator==(const Vocabulary& other) const {
    return mode_ == other.mode_ && entries_ == other.entries_;
  }

 private:
  EmbeddingMode mode_ = EmbeddingMode::kPos;
  std::vector<std::string> entries_;
  std::unordered_map<std::string, std::int32_t> index_;
};

}  // namespace essayscore::text

#endif  // ESSAYSCORE_TEXT_VOCABULARY_H_
