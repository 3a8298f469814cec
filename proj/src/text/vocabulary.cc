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

#include "essayscore/text/vocabulary.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "essayscore/common/error.h"
#include "essayscore/text/essay_tensor.h"
#include "essayscore/text/tokenizer.h"

namespace essayscore::text {
namespace {

std::string lower_word(std::string_view s) {
  std::string out = normalize_quotes(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(EmbeddingMode mode) {
  switch (mode) {
    case EmbeddingMode::kPos:
      return "pos";
    case EmbeddingMode::kWord:
      return "word";
    case EmbeddingMode::kNone:
      return "none";
  }
  return "pos";
}

EmbeddingMode parse_embedding_mode(std::string_view name) {
  if (name == "pos") return EmbeddingMode::kPos;
  if (name == "word") return EmbeddingMode::kWord;
  if (name == "none") return EmbeddingMode::kNone;
  throw DataError("unknown embedding mode '" + std::string(name) +
                  "' (expected pos, word or none)");
}

Vocabulary Vocabulary::from_entries(EmbeddingMode mode,
                                    std::vector<std::string> entries) {
  if (entries.size() < 2 || entries[0] != "<pad>" || entries[1] != "<unk>") {
    throw DataError("vocabulary must start with <pad>, <unk>");
  }
  Vocabulary v;
  v.mode_ = mode;
  v.entries_ = std::move(entries);
  for (std::size_t i = 0; i < v.entries_.size(); ++i) {
    if (!v.index_.emplace(v.entries_[i], static_cast<std::int32_t>(i)).second) {
      throw DataError("duplicate vocabulary entry '" + v.entries_[i] + "'");
    }
  }
  return v;
}

Vocabulary Vocabulary::pos_tags() {
  std::vector<std::string> entries = {"<pad>", "<unk>"};
  for (auto t : kPennTags) entries.emplace_back(t);
  return from_entries(EmbeddingMode::kPos, std::move(entries));
}

Vocabulary Vocabulary::words(const std::vector<const TaggedEssay*>& essays,
                             int min_count) {
  std::map<std::string, int> counts;
  for (const TaggedEssay* essay : essays) {
    for (const auto& sentence : *essay) {
      for (const auto& token : sentence.tokens) counts[lower_word(token.surface)]++;
    }
  }
  std::vector<std::pair<std::string, int>> kept;
  for (auto& [w, c] : counts) {
    if (c >= min_count && w != "<pad>" && w != "<unk>") kept.emplace_back(w, c);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> entries = {"<pad>", "<unk>"};
  for (auto& [w, c] : kept) entries.push_back(std::move(w));
  return from_entries(EmbeddingMode::kWord, std::move(entries));
}

std::int32_t Vocabulary::index_of(std::string_view key) const {
  auto it = index_.find(std::string(key));
  return it == index_.end() ? kUnk : it->second;
}

std::string Vocabulary::key_for(const TaggedSentence& sentence,
                                std::size_t i) const {
  if (mode_ == EmbeddingMode::kWord) return lower_word(sentence.tokens[i].surface);
  return std::string(tag_name(sentence.tags[i]));
}

EssayTensor encode_indices(const TaggedEssay& essay, const Vocabulary& vocab,
                           const TensorCaps& caps) {
  EssayTensor t;
  t.max_sentences = caps.max_sentences;
  t.max_tokens = caps.max_tokens;
  t.indices.assign(caps.max_sentences * caps.max_tokens, Vocabulary::kPad);
  t.mask.assign(caps.max_sentences * caps.max_tokens, 0);
  t.lengths.assign(caps.max_sentences, 0);
  std::size_t row = 0;
  for (const auto& sentence : essay) {
    if (row >= caps.max_sentences) break;
    if (sentence.size() == 0) continue;
    const std::size_t n = std::min(sentence.size(), caps.max_tokens);
    for (std::size_t i = 0; i < n; ++i) {
      t.indices[row * caps.max_tokens + i] = vocab.index_of(vocab.key_for(sentence, i));
      t.mask[row * caps.max_tokens + i] = 1;
    }
    t.lengths[row] = n;
    ++row;
  }
  t.sentence_count = row;
  return t;
}

}  // namespace essayscore::text
