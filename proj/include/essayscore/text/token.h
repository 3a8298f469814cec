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

#ifndef ESSAYSCORE_TEXT_TOKEN_H_
#define ESSAYSCORE_TEXT_TOKEN_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace essayscore::text {

// Byte offsets [begin, end) into the source text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const CharSpan&) const = default;
};

struct Token {
  std::string surface;
  // ASAP anonymisation placeholders such as "@PERSON1" or "@CAPS3".
  bool is_anon_entity = false;
  CharSpan span;

  bool operator==(const Token&) const = default;
};

// The 45 Penn Treebank tags, in a frozen order. Index i of this array is
// the tag id used everywhere (tag-frequency features, vocabulary).
inline constexpr std::array<std::string_view, 45> kPennTags = {
    "CC",  "CD",  "DT",  "EX",  "FW",   "IN",  "JJ",  "JJR", "JJS",
    "LS",  "MD",  "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP",
    "PRP$", "RB", "RBR", "RBS", "RP",   "SYM", "TO",  "UH",  "VB",
    "VBD", "VBG", "VBN", "VBP", "VBZ",  "WDT", "WP",  "WP$", "WRB",
    "#",   "$",   ".",   ",",   ":",    "(",   ")",   "``",  "''"};

inline constexpr std::size_t kNumTags = kPennTags.size();

using TagId = unsigned char;

std::optional<TagId> tag_id(std::string_view tag);
inline std::string_view tag_name(TagId id) { return kPennTags[id]; }

struct TaggedSentence {
  std::vector<Token> tokens;
  std::vector<TagId> tags;  // parallel to tokens

  std::size_t size() const { return tokens.size(); }
  bool operator==(const TaggedSentence&) const = default;
};

using TaggedEssay = std::vector<TaggedSentence>;

}  // namespace essayscore::text

#endif  // ESSAYSCORE_TEXT_TOKEN_H_
