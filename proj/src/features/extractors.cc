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

#include "essayscore/features/extractors.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <set>

#include "essayscore/common/error.h"
#include "essayscore/common/io.h"
#include "essayscore/text/tokenizer.h"

namespace essayscore::features {
namespace {

using text::TaggedEssay;
using text::TaggedSentence;

// Every ratio with a zero denominator is 0.
double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string lower(std::string_view s) {
  std::string out = text::normalize_quotes(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool tag_is(const TaggedSentence& s, std::size_t i, std::string_view tag) {
  return text::tag_name(s.tags[i]) == tag;
}

bool is_finite_verb(const TaggedSentence& s, std::size_t i) {
  const auto t = text::tag_name(s.tags[i]);
  return t == "MD" || t == "VBD" || t == "VBP" || t == "VBZ";
}

bool is_relative(const TaggedSentence& s, std::size_t i) {
  const auto t = text::tag_name(s.tags[i]);
  return t == "WDT" || t == "WP" || t == "WP$" || t == "WRB";
}

bool is_subordinator(const TaggedSentence& s, std::size_t i) {
  static const std::set<std::string, std::less<>> kWords = {
      "after", "although", "because", "before", "if",      "once",
      "since", "that",     "though",  "till",   "unless",  "until",
      "when",  "whenever", "where",   "whereas", "wherever", "whether",
      "while"};
  return tag_is(s, i, "IN") && kWords.count(lower(s.tokens[i].surface)) != 0;
}

bool is_marker(const TaggedSentence& s, std::size_t i) {
  return is_subordinator(s, i) || is_relative(s, i);
}

bool is_negator(std::string_view lowered) {
  static const std::set<std::string, std::less<>> kNeg = {
      "not", "n't", "no", "never", "none", "nobody", "nothing", "neither",
      "nor", "nowhere", "cannot", "without"};
  return kNeg.count(lowered) != 0;
}

struct WordStats {
  std::vector<std::string> words;  // lower-cased, essay order
  std::vector<std::size_t> words_per_sentence;
  std::size_t sentences = 0;
};

WordStats collect_words(const TaggedEssay& essay) {
  WordStats ws;
  for (const auto& s : essay) {
    if (s.size() == 0) continue;
    ++ws.sentences;
    std::size_t n = 0;
    for (const auto& t : s.tokens) {
      if (text::is_word(t.surface)) {
        ws.words.push_back(lower(t.surface));
        ++n;
      }
    }
    ws.words_per_sentence.push_back(n);
  }
  return ws;
}

std::size_t letters(std::string_view word) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(word[i]);
    if (c < 0x80) {
      n += std::isalnum(c) != 0;
    } else {
      n += (c & 0xC0) != 0x80;
    }
  }
  return n;
}

}  // namespace

int count_syllables(std::string_view word) {
  std::string w;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      w += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  int count = 0;
  bool in_group = false;
  for (char c : w) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++count;
    in_group = v;
  }
  if (count > 1 && w.size() >= 2 && w.back() == 'e') {
    const bool consonant_le = w.size() >= 3 && w[w.size() - 2] == 'l' &&
                              !is_vowel(w[w.size() - 3]);
    if (!consonant_le) --count;
  }
  return std::max(count, 1);
}

LengthFeatures extract_length(const TaggedEssay& essay) {
  LengthFeatures f{};
  std::size_t chars = 0, words = 0, word_chars = 0, long_words = 0;
  std::size_t sentences = 0, commas = 0, punct = 0;
  std::size_t max_len = 0, min_len = SIZE_MAX;
  std::set<std::string> punct_types;
  for (const auto& s : essay) {
    if (s.size() == 0) continue;
    ++sentences;
    std::size_t sentence_words = 0;
    for (const auto& t : s.tokens) {
      const std::size_t cp = code_points(t.surface);
      chars += cp;
      if (text::is_word(t.surface)) {
        ++words;
        ++sentence_words;
        word_chars += cp;
        long_words += cp >= 7;
      } else {
        ++punct;
        commas += t.surface == ",";
        punct_types.insert(t.surface);
      }
    }
    max_len = std::max(max_len, sentence_words);
    min_len = std::min(min_len, sentence_words);
  }
  if (sentences == 0) return f;
  const double S = static_cast<double>(sentences);
  const double W = static_cast<double>(words);
  f[0] = static_cast<double>(chars);
  f[1] = W;
  f[2] = S;
  f[3] = ratio(static_cast<double>(word_chars), W);
  f[4] = W / S;
  f[5] = static_cast<double>(max_len);
  f[6] = static_cast<double>(min_len);
  f[7] = ratio(static_cast<double>(long_words), W);
  f[8] = static_cast<double>(commas) / S;
  f[9] = static_cast<double>(punct) / S;
  f[10] = static_cast<double>(punct_types.size());
  return f;
}

ReadabilityFeatures extract_readability(const TaggedEssay& essay,
                                        const Lexicons& lex) {
  ReadabilityFeatures f{};
  const WordStats ws = collect_words(essay);
  if (ws.words.empty() || ws.sentences == 0) return f;

  double syllables = 0, poly = 0, mono = 0, letter_count = 0, long_words = 0,
         difficult = 0;
  for (const auto& w : ws.words) {
    const int syl = count_syllables(w);
    syllables += syl;
    poly += syl >= 3;
    mono += syl == 1;
    const auto n = letters(w);
    letter_count += static_cast<double>(n);
    long_words += n > 6;
    difficult += lex.easy_words.count(w) == 0;
  }
  const double W = static_cast<double>(ws.words.size());
  const double S = static_cast<double>(ws.sentences);
  const double wps = W / S;
  const double spw = syllables / W;

  f[0] = 206.835 - 1.015 * wps - 84.6 * spw;                 // Flesch RE
  f[1] = 0.39 * wps + 11.8 * spw - 15.59;                    // Flesch-Kincaid
  f[2] = 0.4 * (wps + 100.0 * poly / W);                     // Gunning fog
  f[3] = 1.0430 * std::sqrt(poly * 30.0 / S) + 3.1291;       // SMOG
  f[4] = 4.71 * letter_count / W + 0.5 * wps - 21.43;        // ARI
  f[5] = 0.0588 * (100.0 * letter_count / W) -               // Coleman-Liau
         0.296 * (100.0 * S / W) - 15.8;
  f[6] = wps + 100.0 * long_words / W;                       // LIX
  f[7] = long_words / S;                                     // RIX
  const double pct_difficult = 100.0 * difficult / W;        // Dale-Chall
  f[8] = 0.1579 * pct_difficult + 0.0496 * wps + (pct_difficult > 5.0 ? 3.6365 : 0.0);
  f[9] = spw;
  f[10] = poly / W;
  const double lw = ((W - poly) + 3.0 * poly) / S;           // Linsear Write
  f[11] = lw > 20.0 ? lw / 2.0 : (lw - 2.0) / 2.0;
  f[12] = 20.0 - 15.0 * mono / W;                            // FORCAST
  return f;
}

int count_clauses(const TaggedSentence& s) {
  if (s.size() == 0) return 0;
  const std::size_t n = s.size();
  // A boundary opens a new clause at token i; only counts if the current
  // clause already holds tokens.
  std::vector<bool> boundary(n, false);
  for (std::size_t i = 0; i < n; ++i) boundary[i] = is_marker(s, i);
  for (std::size_t i = 0; i < n; ++i) {
    if (!tag_is(s, i, "CC")) continue;
    bool before = false, after = false;
    for (std::size_t j = i; j-- > 0;) {
      if (is_finite_verb(s, j)) before = true;
      if (before || boundary[j]) break;
    }
    for (std::size_t j = i + 1; j < n && !boundary[j]; ++j) {
      if (is_finite_verb(s, j)) {
        after = true;
        break;
      }
    }
    if (before && after) boundary[i] = true;
  }
  int clauses = 1;
  std::size_t current = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (boundary[i] && current > 0) {
      ++clauses;
      current = 0;
    }
    ++current;
  }
  return clauses;
}

ComplexityFeatures extract_complexity(const TaggedEssay& essay) {
  ComplexityFeatures f{};
  double sentences = 0, clauses = 0, tokens = 0, max_clauses = 0,
         depth_sum_sentences = 0, leaf_depth_sum = 0;
  for (const auto& s : essay) {
    if (s.size() == 0) continue;
    ++sentences;
    const int c = count_clauses(s);
    clauses += c;
    max_clauses = std::max(max_clauses, static_cast<double>(c));
    tokens += static_cast<double>(s.size());
    int markers = 0, max_depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const int depth = 1 + markers;
      max_depth = std::max(max_depth, depth);
      leaf_depth_sum += depth;
      markers += is_marker(s, i);
    }
    depth_sum_sentences += max_depth;
  }
  if (sentences == 0) return f;
  f[0] = clauses / sentences;
  f[1] = ratio(tokens, clauses);
  f[2] = max_clauses;
  f[3] = depth_sum_sentences / sentences;
  f[4] = ratio(leaf_depth_sum, tokens);
  return f;
}

VariationFeatures extract_variation(const TaggedEssay& essay, const Lexicons& lex) {
  VariationFeatures f{};
  const WordStats ws = collect_words(essay);
  std::size_t token_total = 0;
  std::array<std::size_t, text::kNumTags> tag_counts{};
  std::set<std::pair<std::string, std::string>> bigrams;
  std::set<std::tuple<std::string, std::string, std::string>> trigrams;
  std::size_t bigram_total = 0, trigram_total = 0;
  for (const auto& s : essay) {
    std::vector<std::string> sw;
    for (std::size_t i = 0; i < s.size(); ++i) {
      ++token_total;
      ++tag_counts[s.tags[i]];
      if (text::is_word(s.tokens[i].surface)) sw.push_back(lower(s.tokens[i].surface));
    }
    for (std::size_t i = 0; i + 1 < sw.size(); ++i) {
      bigrams.emplace(sw[i], sw[i + 1]);
      ++bigram_total;
    }
    for (std::size_t i = 0; i + 2 < sw.size(); ++i) {
      trigrams.emplace(sw[i], sw[i + 1], sw[i + 2]);
      ++trigram_total;
    }
  }
  if (token_total == 0) return f;

  std::unordered_map<std::string, int> freq;
  std::size_t stop = 0, rare = 0;
  for (const auto& w : ws.words) {
    ++freq[w];
    const bool is_stop = lex.stopwords.count(w) != 0;
    stop += is_stop;
    rare += !is_stop && lex.easy_words.count(w) == 0;
  }
  std::size_t hapax = 0;
  for (const auto& [w, c] : freq) hapax += c == 1;
  const double W = static_cast<double>(ws.words.size());
  const double U = static_cast<double>(freq.size());
  f[0] = U;
  f[1] = ratio(U, W);
  f[2] = ratio(U, std::sqrt(2.0 * W));
  f[3] = ratio(static_cast<double>(hapax), U);
  f[4] = ratio(static_cast<double>(stop), W);
  f[5] = ratio(static_cast<double>(bigrams.size()), static_cast<double>(bigram_total));
  f[6] = ratio(static_cast<double>(trigrams.size()), static_cast<double>(trigram_total));
  f[7] = ratio(static_cast<double>(rare), W);
  for (std::size_t t = 0; t < text::kNumTags; ++t) {
    f[8 + t] = static_cast<double>(tag_counts[t]) / static_cast<double>(token_total);
  }
  return f;
}

double sentence_polarity(const TaggedSentence& s, const Lexicons& lex) {
  double sum = 0.0;
  std::size_t words = 0;
  std::vector<std::string> lowered;
  lowered.reserve(s.size());
  for (const auto& t : s.tokens) lowered.push_back(lower(t.surface));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!text::is_word(s.tokens[i].surface)) continue;
    ++words;
    auto it = lex.valence.find(lowered[i]);
    if (it == lex.valence.end()) continue;
    double v = it->second;
    for (std::size_t back = 1; back <= 3 && back <= i; ++back) {
      if (is_negator(lowered[i - back])) {
        v = -v;
        break;
      }
    }
    sum += v;
  }
  if (words == 0) return 0.0;
  return std::clamp(sum / static_cast<double>(words), -1.0, 1.0);
}

SentimentFeatures extract_sentiment(const TaggedEssay& essay, const Lexicons& lex) {
  SentimentFeatures f{};
  double n = 0, pos = 0, neg = 0, neutral = 0, total = 0;
  for (const auto& s : essay) {
    if (s.size() == 0) continue;
    ++n;
    const double p = sentence_polarity(s, lex);
    total += p;
    if (p > 0.05) {
      ++pos;
    } else if (p < -0.05) {
      ++neg;
    } else {
      ++neutral;
    }
  }
  if (n == 0) return f;
  f[0] = pos / n;
  f[1] = neg / n;
  f[2] = neutral / n;
  f[3] = total / n;
  return f;
}

const Lexicons& Lexicons::bundled() {
  static const Lexicons lex = [] {
    Lexicons l;
    const auto dir = data_dir() / "lexicon";
    for (auto& w : read_checked_list(dir / "stopwords.txt")) l.stopwords.insert(std::move(w));
    for (auto& w : read_checked_list(dir / "easy_words.txt")) l.easy_words.insert(std::move(w));
    for (const auto& line : read_checked_list(dir / "valence.txt")) {
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw DataError("valence.txt: expected token<TAB>valence, got '" + line + "'");
      }
      double v = 0.0;
      const char* begin = line.data() + tab + 1;
      const char* end = line.data() + line.size();
      if (std::from_chars(begin, end, v).ec != std::errc()) {
        throw DataError("valence.txt: bad number in '" + line + "'");
      }
      l.valence.emplace(line.substr(0, tab), v);
    }
    return l;
  }();
  return lex;
}

}  // namespace essayscore::features
