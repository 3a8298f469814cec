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

#ifndef ESSAYSCORE_TEXT_TOKENIZER_H_
#define ESSAYSCORE_TEXT_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "essayscore/text/token.h"

namespace essayscore::text {

// Abbreviations that never end a sentence and stay one token with their
// trailing period. Lower-case, period included.
const std::vector<std::string_view>& abbreviations();
bool is_abbreviation(std::string_view word_with_period);

// Sentence boundaries fall after '.', '!' or '?' (plus any closing quotes
// or brackets) when followed by whitespace and then an upper-case letter,
// a quote, an '@' placeholder or end of text, unless the period closes an
// abbreviation. Each span is trimmed of surrounding whitespace.
std::vector<CharSpan> split_sentence_spans(std::string_view text);
std::vector<std::string> split_sentences(std::string_view text);

// Penn-Treebank-flavoured tokenizer. `offset` is added to every span so
// tokens of a sentence can point into the whole essay.
std::vector<Token> tokenize(std::string_view sentence, std::size_t offset = 0);

// split_sentences + tokenize, dropping sentences with no tokens.
std::vector<std::vector<Token>> tokenize_essay(std::string_view text);

// True when the token contains at least one letter or digit (or non-ASCII
// letter byte); punctuation tokens return false.
bool is_word(std::string_view surface);

// Replaces typographic apostrophes/quotes with ASCII ones.
std::string normalize_quotes(std::string_view surface);

}  // namespace essayscore::text

#endif  // ESSAYSCORE_TEXT_TOKENIZER_H_
