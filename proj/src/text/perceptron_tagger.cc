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

#include "essayscore/text/perceptron_tagger.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <cmath>

#include "essayscore/common/checksum.h"
#include "essayscore/common/error.h"
#include "essayscore/common/io.h"
#include "essayscore/common/random.h"
#include "essayscore/text/tokenizer.h"

namespace essayscore::text {

std::optional<TagId> tag_id(std::string_view tag) {
  for (std::size_t i = 0; i < kPennTags.size(); ++i) {
    if (kPennTags[i] == tag) return static_cast<TagId>(i);
  }
  return std::nullopt;
}

namespace {

constexpr std::string_view kHeader = "# essayscore averaged-perceptron tagger v1";
constexpr std::string_view kStart1 = "-START-";
constexpr std::string_view kStart2 = "-START2-";
constexpr std::string_view kEnd1 = "-END-";
constexpr std::string_view kEnd2 = "-END2-";
constexpr std::string_view kAnon = "!ANON";

const TagId kNnp = *tag_id("NNP");

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string normalize_word(std::string_view raw) {
  const std::string w = normalize_quotes(raw);
  if (!w.empty() && w.front() == '@' && w.size() > 1) return std::string(kAnon);
  const bool all_digits =
      !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
  if (w.find('-') != std::string::npos && w.front() != '-') return "!HYPHEN";
  if (all_digits && w.size() == 4) return "!YEAR";
  if (!w.empty() && std::isdigit(static_cast<unsigned char>(w.front()))) {
    return "!DIGITS";
  }
  return lower(w);
}

std::string_view suffix3(std::string_view w) {
  return w.size() > 3 ? w.substr(w.size() - 3) : w;
}

// Coarse orthographic shape of the raw word: leading capital, all caps,
// digits, other.
std::string_view shape(std::string_view raw) {
  if (raw.empty()) return "o";
  const unsigned char c = static_cast<unsigned char>(raw.front());
  if (std::isupper(c)) {
    const bool all_upper = std::all_of(raw.begin(), raw.end(), [](char ch) {
      return !std::isalpha(static_cast<unsigned char>(ch)) ||
             std::isupper(static_cast<unsigned char>(ch));
    });
    return all_upper && raw.size() > 1 ? "X" : "Xx";
  }
  if (std::islower(c)) return "x";
  if (std::isdigit(c)) return "d";
  return "o";
}

// Feature strings for position i. `context` is the normalised sentence
// padded with two start and two end markers; i indexes the unpadded
// sentence.
void features(std::size_t i, std::string_view raw,
              const std::vector<std::string>& context, std::string_view prev,
              std::string_view prev2, std::vector<std::string>& out) {
  out.clear();
  const std::size_t c = i + 2;
  const std::string& word = context[c];
  out.emplace_back("bias");
  out.push_back("i suffix " + std::string(suffix3(word)));
  out.push_back("i pref1 " + std::string(raw.substr(0, 1)));
  out.push_back("i shape " + std::string(shape(raw)));
  out.push_back("i-1 tag " + std::string(prev));
  out.push_back("i-2 tag " + std::string(prev2));
  out.push_back("i tag+i-2 tag " + std::string(prev) + " " + std::string(prev2));
  out.push_back("i word " + word);
  out.push_back("i-1 tag+i word " + std::string(prev) + " " + word);
  out.push_back("i-1 word " + context[c - 1]);
  out.push_back("i-1 suffix " + std::string(suffix3(context[c - 1])));
  out.push_back("i-2 word " + context[c - 2]);
  out.push_back("i+1 word " + context[c + 1]);
  out.push_back("i+1 suffix " + std::string(suffix3(context[c + 1])));
  out.push_back("i+2 word " + context[c + 2]);
}

std::vector<std::string> make_context(const std::vector<std::string>& words) {
  std::vector<std::string> ctx;
  ctx.reserve(words.size() + 4);
  ctx.emplace_back(kStart1);
  ctx.emplace_back(kStart2);
  for (const auto& w : words) ctx.push_back(normalize_word(w));
  ctx.emplace_back(kEnd1);
  ctx.emplace_back(kEnd2);
  return ctx;
}

std::string_view prev_name(const std::vector<TagId>& tags, std::size_t i,
                           std::size_t back) {
  if (i < back) return back == 1 ? kStart1 : (i == 0 ? kStart2 : kStart1);
  return kPennTags[tags[i - back]];
}

// Mutable weights with lazy averaging, used only while training.
struct AveragedModel {
  struct Cell {
    double weight = 0.0;
    double total = 0.0;
    std::int64_t stamp = 0;
  };
  std::unordered_map<std::string, std::array<Cell, kNumTags>> cells;
  std::int64_t instances = 0;

  TagId predict(const std::vector<std::string>& feats) const {
    std::array<double, kNumTags> scores{};
    for (const auto& f : feats) {
      auto it = cells.find(f);
      if (it == cells.end()) continue;
      for (std::size_t t = 0; t < kNumTags; ++t) scores[t] += it->second[t].weight;
    }
    return static_cast<TagId>(std::max_element(scores.begin(), scores.end()) -
                              scores.begin());
  }

  void update(TagId truth, TagId guess, const std::vector<std::string>& feats) {
    ++instances;
    if (truth == guess) return;
    for (const auto& f : feats) {
      auto& row = cells[f];
      bump(row[truth], 1.0);
      bump(row[guess], -1.0);
    }
  }

  void bump(Cell& cell, double delta) {
    cell.total += static_cast<double>(instances - cell.stamp) * cell.weight;
    cell.stamp = instances;
    cell.weight += delta;
  }
};

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", w);
  return buf;
}

}  // namespace

std::vector<TrainingSentence> read_slash_tagged(std::string_view contents) {
  std::vector<TrainingSentence> corpus;
  for (std::string_view line : split_lines(contents)) {
    line = trim(line);
    if (line.empty()) continue;
    TrainingSentence sentence;
    bool ok = true;
    bool open_quote = true;
    for (std::string_view item : split(line, ' ')) {
      if (item.empty()) continue;
      const std::size_t slash = item.rfind('/');
      if (slash == std::string_view::npos || slash == 0) {
        ok = false;
        break;
      }
      std::string_view word = item.substr(0, slash);
      std::string_view tag = item.substr(slash + 1);
      tag = tag.substr(0, std::size_t(std::find(tag.begin(), tag.end(), '|') - tag.begin()));
      if (tag == "\"") {
        tag = open_quote ? "``" : "''";
        open_quote = !open_quote;
      }
      const auto id = tag_id(tag);
      if (!id) {
        ok = false;
        break;
      }
      sentence.emplace_back(std::string(word), *id);
    }
    if (ok && !sentence.empty()) corpus.push_back(std::move(sentence));
  }
  return corpus;
}

PerceptronTagger PerceptronTagger::train(
    const std::vector<TrainingSentence>& corpus,
    const TaggerTrainingOptions& options) {
  PerceptronTagger tagger;

  // Unambiguous frequent words.
  std::unordered_map<std::string, std::array<int, kNumTags>> counts;
  for (const auto& sentence : corpus) {
    for (const auto& [word, tag] : sentence) {
      counts[normalize_quotes(word)][tag] += 1;
    }
  }
  for (const auto& [word, row] : counts) {
    int total = 0;
    for (int c : row) total += c;
    const auto best = std::max_element(row.begin(), row.end());
    if (total >= options.tagdict_min_count &&
        static_cast<double>(*best) / total >= options.tagdict_purity) {
      tagger.tagdict_[word] = static_cast<TagId>(best - row.begin());
    }
  }

  AveragedModel model;
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(options.seed);
  std::vector<std::string> feats;
  for (int iter = 0; iter < options.iterations; ++iter) {
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t idx : order) {
      const auto& sentence = corpus[idx];
      std::vector<std::string> words;
      for (const auto& wt : sentence) words.push_back(wt.first);
      const auto context = make_context(words);
      std::vector<TagId> guesses;
      for (std::size_t i = 0; i < sentence.size(); ++i) {
        TagId guess;
        if (auto it = tagger.tagdict_.find(normalize_quotes(words[i]));
            it != tagger.tagdict_.end()) {
          guess = it->second;
        } else {
          features(i, words[i], context, prev_name(guesses, i, 1),
                   prev_name(guesses, i, 2), feats);
          guess = model.predict(feats);
          model.update(sentence[i].second, guess, feats);
        }
        guesses.push_back(guess);
      }
    }
  }

  // Average and prune.
  for (auto& [feat, row] : model.cells) {
    Sparse sparse;
    for (std::size_t t = 0; t < kNumTags; ++t) {
      auto& cell = row[t];
      const double total =
          cell.total + static_cast<double>(model.instances - cell.stamp) * cell.weight;
      const double avg = total / static_cast<double>(model.instances);
      // Round through the on-disk representation so a trained tagger and
      // its reloaded file behave identically.
      const double stored = std::strtod(format_weight(avg).c_str(), nullptr);
      if (std::abs(stored) >= options.prune_below) {
        sparse.emplace_back(static_cast<TagId>(t), stored);
      }
    }
    if (!sparse.empty()) tagger.weights_.emplace(feat, std::move(sparse));
  }
  return tagger;
}

std::vector<TagId> PerceptronTagger::tag_words(
    const std::vector<std::string>& words) const {
  std::vector<TagId> tags;
  tags.reserve(words.size());
  const auto context = make_context(words);
  std::vector<std::string> feats;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w.size() > 1 && w.front() == '@') {
      tags.push_back(kNnp);
      continue;
    }
    if (auto it = tagdict_.find(normalize_quotes(w)); it != tagdict_.end()) {
      tags.push_back(it->second);
      continue;
    }
    features(i, w, context, prev_name(tags, i, 1), prev_name(tags, i, 2), feats);
    std::array<double, kNumTags> scores{};
    for (const auto& f : feats) {
      auto it = weights_.find(f);
      if (it == weights_.end()) continue;
      for (const auto& [t, weight] : it->second) scores[t] += weight;
    }
    tags.push_back(static_cast<TagId>(
        std::max_element(scores.begin(), scores.end()) - scores.begin()));
  }
  return tags;
}

TaggedSentence PerceptronTagger::tag(std::vector<Token> tokens) const {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const Token& t : tokens) words.push_back(t.surface);
  TaggedSentence out;
  out.tags = tag_words(words);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_anon_entity) out.tags[i] = kNnp;
  }
  out.tokens = std::move(tokens);
  return out;
}

std::string PerceptronTagger::serialize() const {
  std::string body = "tags";
  for (auto t : kPennTags) {
    body += ' ';
    body += t;
  }
  body += '\n';

  // Sorted output so the file is reproducible byte for byte.
  std::map<std::string, TagId> dict(tagdict_.begin(), tagdict_.end());
  body += "tagdict " + std::to_string(dict.size()) + "\n";
  for (const auto& [w, t] : dict) {
    body += w;
    body += '\t';
    body += kPennTags[t];
    body += '\n';
  }
  std::map<std::string, const Sparse*> sorted;
  for (const auto& [f, s] : weights_) sorted.emplace(f, &s);
  body += "weights " + std::to_string(sorted.size()) + "\n";
  for (const auto& [f, s] : sorted) {
    body += f;
    body += '\t';
    bool first = true;
    for (const auto& [t, w] : *s) {
      if (!first) body += ' ';
      first = false;
      body += kPennTags[t];
      body += ':';
      body += format_weight(w);
    }
    body += '\n';
  }
  return std::string(kHeader) + "\n# fnv1a64 " + to_hex(fnv1a64(body)) + "\n" +
         body;
}

void PerceptronTagger::save(const std::filesystem::path& path) const {
  write_file(path, serialize());
}

PerceptronTagger PerceptronTagger::parse(std::string_view contents) {
  auto fail = [](const std::string& why) -> DataError {
    return DataError("tagger weights: " + why);
  };
  const std::size_t l1 = contents.find('\n');
  if (l1 == std::string_view::npos || trim(contents.substr(0, l1)) != kHeader) {
    throw fail("bad header");
  }
  const std::size_t l2 = contents.find('\n', l1 + 1);
  if (l2 == std::string_view::npos) throw fail("truncated");
  std::string_view sum_line = trim(contents.substr(l1 + 1, l2 - l1 - 1));
  constexpr std::string_view kSum = "# fnv1a64 ";
  if (!sum_line.starts_with(kSum)) throw fail("missing checksum");
  const std::string_view body = contents.substr(l2 + 1);
  if (to_hex(fnv1a64(body)) != trim(sum_line.substr(kSum.size()))) {
    throw fail("checksum mismatch");
  }

  PerceptronTagger tagger;
  const auto lines = split_lines(body);
  std::size_t li = 0;
  auto next = [&]() -> std::string_view {
    if (li >= lines.size()) throw fail("truncated");
    return lines[li++];
  };
  auto count_of = [&](std::string_view line, std::string_view key) {
    if (!line.starts_with(key)) throw fail("expected '" + std::string(key) + "'");
    std::size_t n = 0;
    const auto rest = trim(line.substr(key.size()));
    std::from_chars(rest.data(), rest.data() + rest.size(), n);
    return n;
  };
  auto lookup = [&](std::string_view tag) {
    const auto id = tag_id(tag);
    if (!id) throw fail("unknown tag '" + std::string(tag) + "'");
    return *id;
  };

  {
    const auto tags_line = next();
    std::string expected = "tags";
    for (auto t : kPennTags) {
      expected += ' ';
      expected += t;
    }
    if (tags_line != expected) throw fail("tagset differs from the built-in tagset");
  }
  const std::size_t ndict = count_of(next(), "tagdict ");
  for (std::size_t i = 0; i < ndict; ++i) {
    const auto line = next();
    const auto tab = line.rfind('\t');
    if (tab == std::string_view::npos) throw fail("bad tagdict line");
    tagger.tagdict_.emplace(std::string(line.substr(0, tab)),
                            lookup(line.substr(tab + 1)));
  }
  const std::size_t nweights = count_of(next(), "weights ");
  tagger.weights_.reserve(nweights);
  for (std::size_t i = 0; i < nweights; ++i) {
    const auto line = next();
    const auto tab = line.rfind('\t');
    if (tab == std::string_view::npos) throw fail("bad weights line");
    Sparse sparse;
    for (std::string_view item : split(line.substr(tab + 1), ' ')) {
      const auto colon = item.rfind(':');
      if (colon == std::string_view::npos) throw fail("bad weight entry");
      const std::string num(item.substr(colon + 1));
      sparse.emplace_back(lookup(item.substr(0, colon)),
                          std::strtod(num.c_str(), nullptr));
    }
    tagger.weights_.emplace(std::string(line.substr(0, tab)), std::move(sparse));
  }
  return tagger;
}

PerceptronTagger PerceptronTagger::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

const PerceptronTagger& PerceptronTagger::bundled() {
  static const PerceptronTagger tagger =
      load(data_dir() / "tagger" / "en-perceptron.weights");
  return tagger;
}

}  // namespace essayscore::text
