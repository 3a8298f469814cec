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

#ifndef ESSAYSCORE_FEATURES_EXTRACTORS_H_
#define ESSAYSCORE_FEATURES_EXTRACTORS_H_

#include <array>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <string>

#include "essayscore/features/registry.h"
#include "essayscore/text/token.h"

namespace essayscore::features {

// Word lists and valences used by the extractors. Immutable once loaded.
struct Lexicons {
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> easy_words;
  std::unordered_map<std::string, double> valence;

  // Loads the checksummed files under data_dir()/lexicon.
  static const Lexicons& bundled();
};

using LengthFeatures = std::array<double, kLengthDim>;
using ReadabilityFeatures = std::array<double, kReadabilityDim>;
using ComplexityFeatures = std::array<double, kComplexityDim>;
using VariationFeatures = std::array<double, kVariationDim>;
using SentimentFeatures = std::array<double, kSentimentDim>;

// Vowel-group count (a e i o u y), minus a trailing silent 'e' unless the
// word ends in consonant + "le"; at least 1.
int count_syllables(std::string_view word);

LengthFeatures extract_length(const text::TaggedEssay& essay);
ReadabilityFeatures extract_readability(const text::TaggedEssay& essay,
                                        const Lexicons& lex = Lexicons::bundled());
ComplexityFeatures extract_complexity(const text::TaggedEssay& essay);
VariationFeatures extract_variation(const text::TaggedEssay& essay,
                                    const Lexicons& lex = Lexicons::bundled());
SentimentFeatures extract_sentiment(const text::TaggedEssay& essay,
                                    const Lexicons& lex = Lexicons::bundled());

// Clause segmentation used by extract_complexity, exposed for tests: the
// number of clauses in one sentence.
int count_clauses(const text::TaggedSentence& sentence);

// Polarity of one sentence in [-1, 1].
double sentence_polarity(const text::TaggedSentence& sentence, const Lexicons& lex);

}  // namespace essayscore::features

#endif  // ESSAYSCORE_FEATURES_EXTRACTORS_H_
