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

// Offline trainer for the bundled POS tagger weights.
//
//   train-tagger --corpus a.txt --corpus b.txt --out data/tagger/en-perceptron.weights
//
// Corpora are "word/TAG" lines. With --holdout the last fraction of each
// corpus is kept out of training and tagging accuracy on it is reported;
// the shipped weights are trained on everything.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "essayscore/common/io.h"
#include "essayscore/text/perceptron_tagger.h"

using essayscore::text::PerceptronTagger;
using essayscore::text::TaggerTrainingOptions;
using essayscore::text::TrainingSentence;

namespace {

double accuracy(const PerceptronTagger& tagger,
                const std::vector<TrainingSentence>& gold) {
  std::size_t right = 0, total = 0;
  for (const auto& sentence : gold) {
    std::vector<std::string> words;
    for (const auto& wt : sentence) words.push_back(wt.first);
    const auto tags = tagger.tag_words(words);
    for (std::size_t i = 0; i < tags.size(); ++i) {
      right += tags[i] == sentence[i].second;
      ++total;
    }
  }
  return total ? static_cast<double>(right) / static_cast<double>(total) : 0.0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Train the averaged-perceptron POS tagger"};
  std::vector<std::string> corpora;
  std::string out;
  double holdout = 0.0;
  TaggerTrainingOptions options;
  app.add_option("--corpus", corpora, "word/TAG corpus file")->required();
  app.add_option("--out", out, "weights file to write");
  app.add_option("--holdout", holdout, "fraction of each corpus held out for evaluation")
      ->check(CLI::Range(0.0, 0.5));
  app.add_option("--iterations", options.iterations);
  app.add_option("--seed", options.seed);
  app.add_option("--prune", options.prune_below);
  CLI11_PARSE(app, argc, argv);

  std::vector<TrainingSentence> train, test;
  for (const auto& path : corpora) {
    auto sentences = essayscore::text::read_slash_tagged(essayscore::read_file(path));
    const auto cut = static_cast<std::size_t>(
        static_cast<double>(sentences.size()) * (1.0 - holdout));
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      (i < cut ? train : test).push_back(std::move(sentences[i]));
    }
  }
  std::printf("training on %zu sentences\n", train.size());
  const auto tagger = PerceptronTagger::train(train, options);
  std::printf("%zu features kept\n", tagger.feature_count());
  if (!test.empty()) {
    std::printf("held-out accuracy: %.4f on %zu sentences\n",
                accuracy(tagger, test), test.size());
  }
  if (!out.empty()) {
    tagger.save(out);
    const auto reloaded = PerceptronTagger::load(out);
    if (!test.empty()) {
      std::printf("reloaded accuracy: %.4f\n", accuracy(reloaded, test));
    }
    std::printf("wrote %s\n", out.c_str());
  }
  return 0;
}
