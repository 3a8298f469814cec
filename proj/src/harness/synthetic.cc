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

#include "essayscore/harness/synthetic.h"

#include <array>
#include <cmath>
#include <span>

#include "essayscore/common/checksum.h"
#include "essayscore/common/random.h"
#include "essayscore/metrics/prompt.h"

namespace essayscore::harness {
namespace {

template <std::size_t N>
const char* pick(Rng& rng, const std::array<const char*, N>& words) {
  return words[rng.below(N)];
}

constexpr std::array<const char*, 6> kSimpleSubjects = {"I", "We", "They", "He", "She", "My friend"};
constexpr std::array<const char*, 8> kSimpleVerbs = {"like", "see", "want", "have",
                                                     "need", "got", "use", "make"};
constexpr std::array<const char*, 8> kSimpleObjects = {"it", "dogs", "food", "school",
                                                       "games", "stuff", "a car", "fun"};
constexpr std::array<const char*, 6> kConnectives = {"Although", "Because", "While",
                                                     "Whereas", "Since", "Unless"};
constexpr std::array<const char*, 6> kRichSubjects = {
    "the researchers", "many students", "the community", "several historians",
    "our librarians", "the committee"};
constexpr std::array<const char*, 6> kRichVerbs = {
    "carefully analyzed", "thoroughly examined", "repeatedly questioned",
    "enthusiastically supported", "deliberately challenged", "consistently evaluated"};
constexpr std::array<const char*, 6> kRichObjects = {
    "the complicated evidence", "several important arguments", "the historical documents",
    "an ambitious proposal", "the surprising consequences", "numerous perspectives"};
constexpr std::array<const char*, 6> kMainClauses = {
    "the conclusion remains persuasive", "society benefits considerably",
    "the outcome was remarkably different", "everyone learned something valuable",
    "the debate became increasingly sophisticated", "the author presents a convincing case"};
constexpr std::array<const char*, 5> kSloppy = {"and", "so", "but", "then", "like"};

std::string simple_sentence(Rng& rng) {
  std::string s = std::string(pick(rng, kSimpleSubjects)) + " " + pick(rng, kSimpleVerbs) + " " +
                  pick(rng, kSimpleObjects);
  if (rng.bernoulli(0.4)) {
    s += std::string(" ") + pick(rng, kSloppy) + " " + pick(rng, kSimpleObjects);
  }
  return s + (rng.bernoulli(0.2) ? "!" : ".");
}

std::string rich_sentence(Rng& rng) {
  std::string s = std::string(pick(rng, kConnectives)) + " " + pick(rng, kRichSubjects) + " " +
                  pick(rng, kRichVerbs) + " " + pick(rng, kRichObjects) + ", " +
                  pick(rng, kMainClauses);
  if (rng.bernoulli(0.5)) {
    s += std::string(", which ") + pick(rng, kRichVerbs) + " " + pick(rng, kRichObjects);
  }
  return s + ".";
}

}  // namespace

Dataset make_synthetic_dataset(std::size_t essays_per_set, std::uint64_t seed) {
  Dataset ds;
  Rng rng(seed);
  int next_id = 1;
  for (const auto& meta : metrics::asap_prompts()) {
    for (std::size_t k = 0; k < essays_per_set; ++k) {
      Essay e;
      e.essay_id = std::to_string(next_id++);
      e.essay_set = meta.essay_set;
      const int span = meta.score_max - meta.score_min;
      e.score = meta.score_min + static_cast<int>(rng.below(static_cast<std::size_t>(span) + 1));
      const double quality = static_cast<double>(e.score - meta.score_min) / span;
      const std::size_t sentences =
          2 + static_cast<std::size_t>(std::lround(quality * 8.0)) + rng.below(2);
      if (rng.bernoulli(0.5)) e.text = "@PERSON1 wrote about @LOCATION1. ";
      for (std::size_t s = 0; s < sentences; ++s) {
        if (s > 0) e.text += ' ';
        e.text += rng.bernoulli(0.1 + 0.8 * quality) ? rich_sentence(rng) : simple_sentence(rng);
      }
      ds.essays.push_back(std::move(e));
    }
  }
  std::string tsv = format_dataset_tsv(ds);
  ds.checksum = fnv1a64(tsv);
  return ds;
}

std::string format_dataset_tsv(const Dataset& dataset) {
  std::string out = "essay_id\tessay_set\tessay\tdomain1_score\n";
  for (const Essay& e : dataset.essays) {
    std::string quoted = "\"";
    for (char c : e.text) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    out += e.essay_id + "\t" + std::to_string(e.essay_set) + "\t" + quoted + "\t" +
           std::to_string(e.score) + "\n";
  }
  return out;
}

}  // namespace essayscore::harness
