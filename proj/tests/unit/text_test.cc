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

#include <string>
#include <vector>

#include "essayscore/common/error.h"
#include "essayscore/common/random.h"
#include "essayscore/text/essay_tensor.h"
#include "essayscore/text/perceptron_tagger.h"
#include "essayscore/text/pipeline.h"
#include "essayscore/text/tokenizer.h"
#include "essayscore/text/vocabulary.h"

namespace essayscore::text {
namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> tag_names(const TaggedSentence& s) {
  std::vector<std::string> out;
  for (auto t : s.tags) out.emplace_back(tag_name(t));
  return out;
}

std::vector<Token> make_tokens(const std::vector<std::string>& words) {
  std::vector<Token> tokens;
  std::size_t off = 0;
  for (const auto& w : words) {
    tokens.push_back({w, w.size() > 1 && w[0] == '@', {off, off + w.size()}});
    off += w.size() + 1;
  }
  return tokens;
}

std::string strip_space(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

TEST(SplitSentences, Empty) { EXPECT_TRUE(split_sentences("").empty()); }

TEST(SplitSentences, UnambiguousBoundary) {
  EXPECT_EQ(split_sentences("I agree. Computers help."),
            (std::vector<std::string>{"I agree.", "Computers help."}));
}

TEST(SplitSentences, AbbreviationGuard) {
  EXPECT_EQ(split_sentences("Dr. Smith said so. Really."),
            (std::vector<std::string>{"Dr. Smith said so.", "Really."}));
  EXPECT_EQ(split_sentences("We live in the U.S. It is big."),
            (std::vector<std::string>{"We live in the U.S. It is big."}));
}

TEST(SplitSentences, NeedsCapitalQuoteOrPlaceholder) {
  EXPECT_EQ(split_sentences("it works. it really does."),
            (std::vector<std::string>{"it works. it really does."}));
  EXPECT_EQ(split_sentences("Wow! \"Yes,\" she said. @PERSON1 left?  Done"),
            (std::vector<std::string>{"Wow!", "\"Yes,\" she said.",
                                      "@PERSON1 left?", "Done"}));
}

TEST(SplitSentences, ClosingQuoteStaysWithSentence) {
  EXPECT_EQ(split_sentences("He said \"stop.\" Then he left."),
            (std::vector<std::string>{"He said \"stop.\"", "Then he left."}));
}

TEST(SplitSentences, PreservesNonWhitespaceProperty) {
  Rng rng(7);
  const std::string alphabet = "aB. !?\"'@1 \n.Dr";
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const std::size_t n = rng.below(60);
    for (std::size_t i = 0; i < n; ++i) text += alphabet[rng.below(alphabet.size())];
    std::string joined;
    for (const auto& s : split_sentences(text)) joined += s;
    EXPECT_EQ(strip_space(joined), strip_space(text)) << text;
  }
}

TEST(Tokenize, Contraction) {
  EXPECT_EQ(surfaces(tokenize("I don't care.")),
            (std::vector<std::string>{"I", "do", "n't", "care", "."}));
}

TEST(Tokenize, Placeholder) {
  const auto toks = tokenize("@PERSON1 waved");
  EXPECT_EQ(surfaces(toks), (std::vector<std::string>{"@PERSON1", "waved"}));
  EXPECT_TRUE(toks[0].is_anon_entity);
  EXPECT_FALSE(toks[1].is_anon_entity);
}

TEST(Tokenize, Empty) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, CliticsNumbersAndPunctuation) {
  EXPECT_EQ(surfaces(tokenize("It's 3.5 miles, isn't it? Can't, won't!")),
            (std::vector<std::string>{"It", "'s", "3.5", "miles", ",", "is",
                                      "n't", "it", "?", "Ca", "n't", ",", "wo",
                                      "n't", "!"}));
  EXPECT_EQ(surfaces(tokenize("Mr. Lee's well-known e.g. list...")),
            (std::vector<std::string>{"Mr.", "Lee", "'s", "well-known", "e.g.",
                                      "list", ".", ".", "."}));
}

TEST(Tokenize, TypographicApostrophe) {
  EXPECT_EQ(surfaces(tokenize("don\xE2\x80\x99t \xE2\x80\x9Cgo\xE2\x80\x9D")),
            (std::vector<std::string>{"do", "n\xE2\x80\x99t", "\xE2\x80\x9C",
                                      "go", "\xE2\x80\x9D"}));
}

TEST(Tokenize, SpansPointIntoSource) {
  const std::string text = "Hello there. I don't know @CAPS1!";
  for (const auto& sentence : tokenize_essay(text)) {
    for (const auto& t : sentence) {
      ASSERT_LE(t.span.end, text.size());
      EXPECT_EQ(text.substr(t.span.begin, t.span.size()), t.surface);
      EXPECT_FALSE(t.surface.empty());
    }
  }
}

TEST(Tokenize, IdempotentOnRandomAscii) {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const std::size_t n = rng.below(40);
    for (std::size_t i = 0; i < n; ++i) {
      text += static_cast<char>(32 + rng.below(95));
    }
    const auto first = surfaces(tokenize(text));
    std::string joined;
    for (const auto& s : first) joined += s + " ";
    EXPECT_EQ(surfaces(tokenize(joined)), first) << text;
  }
}

TEST(PosTag, PlaceholderIsProperNoun) {
  const auto& tagger = PerceptronTagger::bundled();
  EXPECT_EQ(tag_names(tagger.tag(make_tokens({"@PERSON1"}))),
            (std::vector<std::string>{"NNP"}));
}

TEST(PosTag, GoldenDeterminerNoun) {
  const auto& tagger = PerceptronTagger::bundled();
  EXPECT_EQ(tag_names(tagger.tag(make_tokens({"the", "dog"}))),
            (std::vector<std::string>{"DT", "NN"}));
}

TEST(PosTag, PronounVerbNounVerbAdjective) {
  const auto& tagger = PerceptronTagger::bundled();
  const auto tags =
      tag_names(tagger.tag(make_tokens({"I", "think", "computers", "are", "necessary"})));
  ASSERT_EQ(tags.size(), 5u);
  EXPECT_EQ(tags[0].substr(0, 3), "PRP");
  EXPECT_EQ(tags[1].substr(0, 2), "VB");
  EXPECT_EQ(tags[2].substr(0, 2), "NN");
  EXPECT_EQ(tags[3].substr(0, 2), "VB");
  EXPECT_EQ(tags[4].substr(0, 2), "JJ");
}

TEST(PosTag, LengthPreservedOnRandomSentences) {
  const auto& tagger = PerceptronTagger::bundled();
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const std::size_t n = 1 + rng.below(50);
    for (std::size_t i = 0; i < n; ++i) text += static_cast<char>(32 + rng.below(95));
    auto tokens = tokenize(text);
    if (tokens.empty()) continue;
    const std::size_t len = tokens.size();
    const auto tagged = tagger.tag(std::move(tokens));
    EXPECT_EQ(tagged.tags.size(), len);
    EXPECT_EQ(tagged.tokens.size(), len);
    for (auto t : tagged.tags) EXPECT_LT(t, kNumTags);
  }
}

TEST(PosTag, DeterministicAcrossCalls) {
  const std::string text =
      "Computers are useful because they help people learn. @PERSON1 said "
      "that dogs don't like cats, which surprised everyone.";
  EXPECT_EQ(analyze(text), analyze(text));
}

TEST(PosTag, WeightsRoundTripThroughText) {
  std::vector<TrainingSentence> corpus =
      read_slash_tagged("The/DT cat/NN sat/VBD ./.\nA/DT dog/NN ran/VBD ./.\n");
  TaggerTrainingOptions options;
  options.tagdict_min_count = 1000;  // force the perceptron path
  const auto tagger = PerceptronTagger::train(corpus, options);
  const auto reloaded = PerceptronTagger::parse(tagger.serialize());
  EXPECT_EQ(reloaded.serialize(), tagger.serialize());
  EXPECT_EQ(reloaded.tag_words({"The", "dog", "sat", "."}),
            tagger.tag_words({"The", "dog", "sat", "."}));
}

TEST(PosTag, CorruptWeightsRejected) {
  std::string contents = PerceptronTagger::bundled().serialize();
  contents[contents.size() / 2] ^= 1;
  EXPECT_THROW(PerceptronTagger::parse(contents), Error);
}

TEST(SlashTagged, QuotesAlternateAndCompoundTagsSplit) {
  const auto corpus = read_slash_tagged("\"/\" Hi/UH \"/\" running/VBG|NN\n");
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_EQ(tag_name(corpus[0][0].second), "``");
  EXPECT_EQ(tag_name(corpus[0][2].second), "''");
  EXPECT_EQ(tag_name(corpus[0][3].second), "VBG");
}

TaggedEssay essay_of(std::initializer_list<std::vector<std::string>> sentences) {
  TaggedEssay essay;
  for (const auto& tags : sentences) {
    TaggedSentence s;
    std::vector<std::string> words;
    for (std::size_t i = 0; i < tags.size(); ++i) words.push_back("w" + std::to_string(i));
    s.tokens = make_tokens(words);
    for (const auto& t : tags) s.tags.push_back(*tag_id(t));
    essay.push_back(std::move(s));
  }
  return essay;
}

TEST(EncodeIndices, PaddingSemantics) {
  const auto vocab = Vocabulary::pos_tags();
  const auto t = encode_indices(essay_of({{"DT", "NN", "VBD"}}), vocab, {2, 5});
  EXPECT_EQ(t.sentence_count, 1u);
  const std::vector<std::int32_t> row0 = {vocab.index_of("DT"), vocab.index_of("NN"),
                                          vocab.index_of("VBD"), 0, 0};
  EXPECT_EQ(std::vector<std::int32_t>(t.indices.begin(), t.indices.begin() + 5), row0);
  EXPECT_EQ(std::vector<std::int32_t>(t.indices.begin() + 5, t.indices.end()),
            std::vector<std::int32_t>(5, Vocabulary::kPad));
  int valid = 0;
  for (auto m : t.mask) valid += m;
  EXPECT_EQ(valid, 3);
}

TEST(EncodeIndices, EmptyEssay) {
  const auto t = encode_indices({}, Vocabulary::pos_tags(), {3, 4});
  EXPECT_EQ(t.sentence_count, 0u);
  for (auto i : t.indices) EXPECT_EQ(i, Vocabulary::kPad);
  for (auto m : t.mask) EXPECT_EQ(m, 0);
}

TEST(EncodeIndices, TruncatesSentencesAndTokens) {
  TaggedEssay essay;
  for (int i = 0; i < 120; ++i) {
    auto s = essay_of({{i % 2 ? "NN" : "DT", "VB"}});
    essay.push_back(s[0]);
  }
  essay.push_back(essay_of({std::vector<std::string>(60, "NN")})[0]);
  const auto t = encode_indices(essay, Vocabulary::pos_tags());
  EXPECT_EQ(t.sentence_count, 100u);
  const auto vocab = Vocabulary::pos_tags();
  for (std::size_t s = 0; s < 100; ++s) {
    EXPECT_EQ(t.at(s, 0), vocab.index_of(s % 2 ? "NN" : "DT"));
  }
  std::vector<TaggedSentence> long_one = {essay.back()};
  EXPECT_EQ(encode_indices(long_one, vocab).lengths[0], 50u);
}

TEST(EncodeIndices, MaskedCellsHoldRealTagsInPosMode) {
  const auto essay = analyze("The dog barked. It ran to the park, didn't it?");
  const auto t = encode_indices(essay, Vocabulary::pos_tags(), {4, 8});
  for (std::size_t i = 0; i < t.indices.size(); ++i) {
    if (t.mask[i]) {
      EXPECT_GE(t.indices[i], 2);
    } else {
      EXPECT_EQ(t.indices[i], Vocabulary::kPad);
    }
  }
}

TEST(Vocabulary, WordModeMinFrequencyAndUnk) {
  const auto a = analyze("The cat sat. The cat ran.");
  const auto vocab = Vocabulary::words({&a}, 2);
  EXPECT_EQ(vocab.entries()[0], "<pad>");
  EXPECT_EQ(vocab.entries()[1], "<unk>");
  EXPECT_GE(vocab.index_of("the"), 2);
  EXPECT_GE(vocab.index_of("cat"), 2);
  EXPECT_EQ(vocab.index_of("sat"), Vocabulary::kUnk);
  const auto t = encode_indices(analyze("The dog sat."), vocab);
  EXPECT_EQ(t.at(0, 0), vocab.index_of("the"));
  EXPECT_EQ(t.at(0, 1), Vocabulary::kUnk);
}

TEST(Cp1252, DecodesHighBytesAndReplacesUndefined) {
  EXPECT_EQ(decode_cp1252("don\x92t"), "don\xE2\x80\x99t");
  EXPECT_EQ(decode_cp1252("caf\xE9"), "caf\xC3\xA9");
  EXPECT_EQ(decode_cp1252("\x81"), "\xEF\xBF\xBD");
  EXPECT_EQ(decode_cp1252("\x80"), "\xE2\x82\xAC");
}

TEST(Pretagged, RoundTrip) {
  const auto essay = analyze("I agree. Computers help people.");
  const auto parsed = parse_pretagged(format_pretagged(essay));
  ASSERT_EQ(parsed.size(), essay.size());
  for (std::size_t i = 0; i < essay.size(); ++i) {
    EXPECT_EQ(parsed[i].tags, essay[i].tags);
    EXPECT_EQ(surfaces(parsed[i].tokens), surfaces(essay[i].tokens));
  }
}

TEST(Pretagged, CollectionAndErrors) {
  const auto all = parse_pretagged_collection(
      "#essay_id=1\nHi\tUH\n\n#essay_id=2\nGo\tVB\n.\t.\n\n");
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all.at("2")[0].size(), 2u);
  EXPECT_THROW(parse_pretagged("Hi\tNOTATAG\n"), Error);
  EXPECT_THROW(parse_pretagged("no tab here\n"), Error);
}

}  // namespace
}  // namespace essayscore::text
