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

#ifndef ESSAYSCORE_TEXT_PERCEPTRON_TAGGER_H_
#define ESSAYSCORE_TEXT_PERCEPTRON_TAGGER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "essayscore/text/token.h"

namespace essayscore::text {

// One gold-tagged training sentence: (word, tag id) pairs.
using TrainingSentence = std::vector<std::pair<std::string, TagId>>;

struct TaggerTrainingOptions {
  int iterations = 5;
  std::uint64_t seed = 1;
  // Words seen at least this often with one tag taking at least
  // `tagdict_purity` of the mass are tagged by lookup.
  int tagdict_min_count = 20;
  double tagdict_purity = 0.97;
  // Averaged weights with |w| below this are dropped when saving.
  double prune_below = 1e-3;
};

// Greedy left-to-right averaged perceptron over the fixed 45-tag set.
// Immutable after construction; tag() is safe to call from many threads.
class PerceptronTagger {
 public:
  PerceptronTagger() = default;

  static PerceptronTagger train(const std::vector<TrainingSentence>& corpus,
                                const TaggerTrainingOptions& options);

  // Text weights file; see save() for the layout. Verifies the checksum.
  static PerceptronTagger load(const std::filesystem::path& path);
  static PerceptronTagger parse(std::string_view contents);

  // Layout:
  //   # essayscore averaged-perceptron tagger v1
  //   # fnv1a64 <hex of FNV-1a over every byte after this line>
  //   tags <45 tags separated by spaces>
  //   tagdict <n>
  //   <word>\t<tag>                               (n lines)
  //   weights <m>
  //   <feature>\t<tag>:<weight> <tag>:<weight>... (m lines)
  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

  // Placeholder tokens are forced to NNP. Never returns an empty tag.
  TaggedSentence tag(std::vector<Token> tokens) const;
  std::vector<TagId> tag_words(const std::vector<std::string>& words) const;

  std::size_t feature_count() const { return weights_.size(); }

  // The bundled tagger loaded once from data_dir()/tagger.
  static const PerceptronTagger& bundled();

 private:
  using Sparse = std::vector<std::pair<TagId, double>>;

  std::unordered_map<std::string, TagId> tagdict_;
  std::unordered_map<std::string, Sparse> weights_;
};

// Reads "word/TAG word/TAG ..." lines (one sentence per line). Straight
// double quotes tagged '"' alternate between `` and ''; compound tags such
// as "VBG|NN" keep their first member; sentences with other unknown tags
// are skipped.
std::vector<TrainingSentence> read_slash_tagged(std::string_view contents);

}  // namespace essayscore::text

#endif  // ESSAYSCORE_TEXT_PERCEPTRON_TAGGER_H_
