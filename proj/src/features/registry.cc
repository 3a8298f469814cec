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

#include "essayscore/features/registry.h"

#include "essayscore/common/checksum.h"
#include "essayscore/common/error.h"
#include "essayscore/text/token.h"

namespace essayscore::features {
namespace {

// CSV-safe column names for the punctuation tags.
std::string tag_column(std::string_view tag) {
  if (tag == "#") return "HASH";
  if (tag == "$") return "DOLLAR";
  if (tag == ".") return "PERIOD";
  if (tag == ",") return "COMMA";
  if (tag == ":") return "COLON";
  if (tag == "(") return "LRB";
  if (tag == ")") return "RRB";
  if (tag == "``") return "OPEN_QUOTE";
  if (tag == "''") return "CLOSE_QUOTE";
  return std::string(tag);
}

std::vector<FeatureCategory> reference_categories() {
  std::vector<FeatureCategory> cats;
  cats.push_back({"length",
                  {"char_count", "word_count", "sentence_count",
                   "mean_word_length", "mean_sentence_length",
                   "max_sentence_length", "min_sentence_length",
                   "long_word_ratio", "commas_per_sentence",
                   "punctuation_per_sentence", "unique_punctuation"}});
  cats.push_back({"readability",
                  {"flesch_reading_ease", "flesch_kincaid_grade", "gunning_fog",
                   "smog", "automated_readability_index", "coleman_liau",
                   "lix", "rix", "dale_chall", "syllables_per_word",
                   "polysyllable_ratio", "linsear_write", "forcast"}});
  cats.push_back({"complexity",
                  {"clauses_per_sentence", "mean_clause_length",
                   "max_clauses_per_sentence", "mean_parse_depth",
                   "mean_leaf_depth"}});
  FeatureCategory variation{"variation",
                            {"unique_words", "type_token_ratio",
                             "corrected_type_token_ratio", "hapax_ratio",
                             "stopword_ratio", "distinct_bigram_ratio",
                             "distinct_trigram_ratio", "rare_word_ratio"}};
  for (auto tag : text::kPennTags) {
    variation.features.push_back("tag_freq_" + tag_column(tag));
  }
  cats.push_back(std::move(variation));
  cats.push_back({"sentiment",
                  {"positive_sentence_ratio", "negative_sentence_ratio",
                   "neutral_sentence_ratio", "mean_sentence_polarity"}});
  return cats;
}

}  // namespace

FeatureRegistry::FeatureRegistry(std::vector<FeatureCategory> categories)
    : categories_(std::move(categories)) {
  for (const auto& cat : categories_) {
    for (const auto& f : cat.features) names_.push_back(cat.name + "." + f);
  }
}

const FeatureRegistry& FeatureRegistry::reference() {
  static const FeatureRegistry registry(reference_categories());
  return registry;
}

std::size_t FeatureRegistry::offset_of(std::string_view category) const {
  std::size_t offset = 0;
  for (const auto& cat : categories_) {
    if (cat.name == category) return offset;
    offset += cat.features.size();
  }
  throw Error("unknown feature category '" + std::string(category) + "'");
}

std::uint64_t FeatureRegistry::fingerprint() const {
  Fnv1a64 h;
  for (const auto& name : names_) {
    h.update(name);
    h.update("\n");
  }
  return h.digest();
}

}  // namespace essayscore::features
