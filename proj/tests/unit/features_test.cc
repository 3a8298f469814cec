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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "essayscore/common/error.h"
#include "essayscore/common/io.h"
#include "essayscore/common/random.h"
#include "essayscore/features/extractors.h"
#include "essayscore/features/feature_vector.h"
#include "essayscore/features/registry.h"
#include "essayscore/text/pipeline.h"
#include "feature_fixture.h"

namespace essayscore::features {
namespace {

using text::analyze;

using testing::read_fixture;

TEST(Registry, DimensionAndCategoryBudget) {
  const auto& reg = FeatureRegistry::reference();
  EXPECT_EQ(reg.dimension(), 86u);
  std::vector<std::size_t> sizes;
  for (const auto& c : reg.categories()) sizes.push_back(c.features.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{11, 13, 5, 53, 4}));
  std::set<std::string> unique(reg.names().begin(), reg.names().end());
  EXPECT_EQ(unique.size(), reg.names().size());
  for (const auto& n : reg.names()) EXPECT_EQ(n.find(','), std::string::npos) << n;
  EXPECT_EQ(reg.offset_of("variation"), 29u);
}

TEST(Syllables, VowelGroupHeuristic) {
  EXPECT_EQ(count_syllables("apple"), 2);
  EXPECT_EQ(count_syllables("the"), 1);
  EXPECT_EQ(count_syllables("make"), 1);
  EXPECT_EQ(count_syllables("table"), 2);
  EXPECT_EQ(count_syllables("computer"), 3);
  EXPECT_EQ(count_syllables("rhythm"), 1);
  EXPECT_EQ(count_syllables("1999"), 1);
}

TEST(Length, EmptyEssay) {
  for (double v : extract_length({})) EXPECT_EQ(v, 0.0);
}

TEST(Length, HandCountedHiThere) {
  const auto f = extract_length(analyze("Hi. Hi there."));
  EXPECT_EQ(f[1], 3.0);  // words
  EXPECT_EQ(f[2], 2.0);  // sentences
  EXPECT_DOUBLE_EQ(f[4], 1.5);
  EXPECT_EQ(f[0], 11.0);  // H i . H i t h e r e .
  EXPECT_EQ(f[5], 2.0);
  EXPECT_EQ(f[6], 1.0);
  EXPECT_EQ(f[9], 1.0);   // one period per sentence
  EXPECT_EQ(f[10], 1.0);  // only "."
}

TEST(Length, MeanWordLength) {
  const auto f = extract_length(analyze("aaaa bbbb"));
  EXPECT_DOUBLE_EQ(f[3], 4.0);
}

TEST(Length, AppendingSentenceNeverDecreasesCounts) {
  const std::vector<std::string> pieces = {
      "I like dogs.", "They are loyal and kind.", "@PERSON1 has three of them!",
      "Why?", "Because dogs make people happy, which matters."};
  std::string text;
  LengthFeatures prev{};
  for (const auto& p : pieces) {
    text += (text.empty() ? "" : " ") + p;
    const auto f = extract_length(analyze(text));
    EXPECT_GE(f[0], prev[0]);
    EXPECT_GE(f[1], prev[1]);
    EXPECT_GE(f[2], prev[2]);
    prev = f;
  }
}

TEST(Readability, ZeroWordsGivesZeros) {
  for (double v : extract_readability({})) EXPECT_EQ(v, 0.0);
  for (double v : extract_readability(analyze("!!! ?"))) EXPECT_EQ(v, 0.0);
}

TEST(Readability, FleschOnTheCatSat) {
  // 3 words, 1 sentence, 3 syllables.
  const auto f = extract_readability(analyze("The cat sat."));
  EXPECT_NEAR(f[0], 206.835 - 1.015 * 3.0 - 84.6 * 1.0, 1e-12);
  EXPECT_NEAR(f[1], 0.39 * 3.0 + 11.8 * 1.0 - 15.59, 1e-12);
  EXPECT_NEAR(f[9], 1.0, 1e-15);
  EXPECT_NEAR(f[12], 20.0 - 15.0, 1e-12);  // all monosyllables
  // "the", "cat", "sat" are all familiar words: Dale-Chall = 0.0496 * 3.
  EXPECT_NEAR(f[8], 0.0496 * 3.0, 1e-12);
}

TEST(Complexity, SingleClause) {
  const auto f = extract_complexity(analyze("I ran."));
  EXPECT_EQ(f[0], 1.0);
  EXPECT_EQ(f[1], 3.0);
  EXPECT_EQ(f[2], 1.0);
  EXPECT_EQ(f[3], 1.0);
  EXPECT_EQ(f[4], 1.0);
}

TEST(Complexity, SubordinatorOpensClause) {
  const auto essay = analyze("I ran because I was late.");
  ASSERT_EQ(essay.size(), 1u);
  EXPECT_EQ(count_clauses(essay[0]), 2);
  const auto f = extract_complexity(essay);
  EXPECT_EQ(f[2], 2.0);
  // depths: I ran because -> 1, I was late . -> 2
  EXPECT_DOUBLE_EQ(f[4], (3 * 1.0 + 4 * 2.0) / 7.0);
  EXPECT_EQ(f[3], 2.0);
}

TEST(Complexity, CoordinatedFiniteClauses) {
  const auto essay = analyze("I walked home and she stayed inside.");
  EXPECT_EQ(count_clauses(essay[0]), 2);
  const auto np = analyze("She likes cats and dogs.");
  EXPECT_EQ(count_clauses(np[0]), 1);
}

TEST(Complexity, EmptyEssay) {
  for (double v : extract_complexity({})) EXPECT_EQ(v, 0.0);
}

TEST(Variation, RepeatedWord) {
  const auto f = extract_variation(analyze("a a a"));
  EXPECT_EQ(f[0], 1.0);
  EXPECT_DOUBLE_EQ(f[1], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(f[2], 1.0 / std::sqrt(6.0));
  EXPECT_EQ(f[3], 0.0);  // no hapax
}

TEST(Variation, StopwordProportion) {
  const auto f = extract_variation(analyze("the dog ate the bone"));
  EXPECT_DOUBLE_EQ(f[4], 2.0 / 5.0);
  EXPECT_DOUBLE_EQ(f[5], 1.0);  // 4 distinct bigrams of 4
}

TEST(Variation, TagFrequenciesSumToOne) {
  for (const auto& e : read_fixture()) {
    const auto f = extract_variation(analyze(e.text));
    const double sum = std::accumulate(f.begin() + 8, f.end(), 0.0);
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
  const auto empty = extract_variation({});
  EXPECT_EQ(std::accumulate(empty.begin() + 8, empty.end(), 0.0), 0.0);
}

TEST(Sentiment, LexiconFreeSentencesAreNeutral) {
  const auto f = extract_sentiment(analyze("The table is brown. It has four legs."));
  EXPECT_EQ(f, (SentimentFeatures{0, 0, 1, 0}));
}

TEST(Sentiment, EmptyEssayIsAllZeros) {
  EXPECT_EQ(extract_sentiment({}), (SentimentFeatures{0, 0, 0, 0}));
}

TEST(Sentiment, SingleValencedWord) {
  Lexicons lex;
  lex.valence["sunny"] = 2.0;
  const auto f = extract_sentiment(analyze("sunny"), lex);
  EXPECT_EQ(f[0], 1.0);
  EXPECT_EQ(f[3], 1.0);  // mean valence 2 clamps to 1
}

TEST(Sentiment, NegationWithinThreeTokensFlips) {
  Lexicons lex;
  lex.valence["good"] = 2.0;
  const auto neg = analyze("It is not very good.");
  // 5 words ("It is not very good"), valence -2 -> -0.4.
  EXPECT_NEAR(sentence_polarity(neg[0], lex), -0.4, 1e-12);
  const auto far = analyze("Not that it was ever really good.");
  EXPECT_GT(sentence_polarity(far[0], lex), 0.0);
}

TEST(Assemble, DimensionDeterminismAndEmpty) {
  for (const auto& e : read_fixture()) {
    const auto a = assemble(analyze(e.text), e.set);
    const auto b = assemble(analyze(e.text), e.set);
    EXPECT_EQ(a.values.size(), 86u);
    EXPECT_EQ(a, b);
  }
  const auto empty = assemble({}, 1);
  for (double v : empty.values) EXPECT_EQ(v, 0.0);
}

TEST(Normalization, MinMaxPerSet) {
  std::vector<FeatureVector> vs(3);
  for (int i = 0; i < 3; ++i) {
    vs[i].essay_set = 2;
    vs[i].values.fill(5.0);
    vs[i].values[0] = 2.0 + 2.0 * i;
  }
  const auto stats = NormalizationStats::fit(vs);
  EXPECT_EQ(stats.apply(vs[0]).values[0], 0.0);
  EXPECT_EQ(stats.apply(vs[1]).values[0], 0.5);
  EXPECT_EQ(stats.apply(vs[2]).values[0], 1.0);
  EXPECT_EQ(stats.apply(vs[1]).values[1], 0.0);  // constant feature
}

TEST(Normalization, ClampsOutOfRange) {
  std::vector<FeatureVector> vs(2);
  vs[0].essay_set = vs[1].essay_set = 4;
  vs[1].values.fill(10.0);
  const auto stats = NormalizationStats::fit(vs);
  FeatureVector probe;
  probe.essay_set = 4;
  probe.values.fill(12.0);
  probe.values[3] = -1.0;
  const auto out = stats.apply(probe);
  EXPECT_EQ(out.values[0], 1.0);
  EXPECT_EQ(out.values[3], 0.0);
}

TEST(Normalization, UnknownSetIsAnError) {
  const auto stats = NormalizationStats::fit({FeatureVector{{}, 1}});
  EXPECT_THROW(stats.apply(FeatureVector{{}, 2}), DataError);
}

TEST(Normalization, SetsAreIndependentAndOrderFree) {
  const auto fixture = read_fixture();
  std::vector<FeatureVector> raw;
  Rng rng(5);
  for (int copy = 0; copy < 4; ++copy) {
    for (const auto& e : fixture) {
      auto fv = assemble(analyze(e.text), copy % 2 + 1);
      for (double& v : fv.values) v *= 1.0 + rng.uniform(0.0, 0.5);
      raw.push_back(fv);
    }
  }
  const auto stats = NormalizationStats::fit(raw);
  auto shuffled = raw;
  rng.shuffle(std::span<FeatureVector>(shuffled));
  const auto stats2 = NormalizationStats::fit(shuffled);
  EXPECT_EQ(stats, stats2);
  for (const auto& fv : raw) {
    const auto n = stats.apply(fv);
    for (double v : n.values) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
  // Set 1 stats do not move when set 2 essays change.
  auto altered = raw;
  for (auto& fv : altered) {
    if (fv.essay_set == 2) fv.values.fill(1e6);
  }
  EXPECT_EQ(NormalizationStats::fit(altered).ranges().at(1), stats.ranges().at(1));
}

// Golden file pins every extractor output on the five-essay fixture. Set
// ESSAYSCORE_UPDATE_GOLDEN=1 to rewrite it after an intentional change.
TEST(Golden, FixtureFeaturesMatchFrozenValues) {
  const auto fixture = read_fixture();
  ASSERT_EQ(fixture.size(), 5u);
  std::vector<FeatureVector> vectors;
  for (const auto& e : fixture) vectors.push_back(assemble(analyze(e.text), e.set));
  if (const char* env = std::getenv("ESSAYSCORE_UPDATE_GOLDEN"); env && *env == '1') {
    write_file(testing::golden_path(), testing::format_golden(fixture, vectors));
  }
  for (const auto& m : testing::compare_golden(fixture, vectors)) {
    ADD_FAILURE() << "essay " << m.essay_id << " " << m.feature << ": expected " << m.expected
                  << ", got " << m.actual;
  }
}

}  // namespace
}  // namespace essayscore::features
