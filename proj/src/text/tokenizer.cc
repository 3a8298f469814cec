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

#include "essayscore/text/tokenizer.h"

#include <algorithm>
#include <cctype>

namespace essayscore::text {
namespace {

bool is_ascii_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}
bool is_ascii_upper(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0;
}
bool is_ascii_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}
bool is_ascii_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

// Multi-byte UTF-8 sequences that behave as punctuation or space.
constexpr std::string_view kLeftSingle = "\xE2\x80\x98";
constexpr std::string_view kRightSingle = "\xE2\x80\x99";
constexpr std::string_view kLeftDouble = "\xE2\x80\x9C";
constexpr std::string_view kRightDouble = "\xE2\x80\x9D";
constexpr std::string_view kEnDash = "\xE2\x80\x93";
constexpr std::string_view kEmDash = "\xE2\x80\x94";
constexpr std::string_view kEllipsis = "\xE2\x80\xA6";
constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
constexpr std::string_view kNbsp = "\xC2\xA0";

bool starts_with_at(std::string_view text, std::size_t i,
                    std::string_view what) {
  return text.substr(i, what.size()) == what;
}

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

// Byte length of a multi-byte punctuation character at i, else 0.
std::size_t multibyte_punct(std::string_view text, std::size_t i) {
  for (std::string_view p : {kLeftSingle, kRightSingle, kLeftDouble,
                             kRightDouble, kEnDash, kEmDash, kEllipsis,
                             kReplacement}) {
    if (starts_with_at(text, i, p)) return p.size();
  }
  return 0;
}

std::size_t space_len(std::string_view text, std::size_t i) {
  if (std::isspace(static_cast<unsigned char>(text[i]))) return 1;
  if (starts_with_at(text, i, kNbsp)) return kNbsp.size();
  return 0;
}

std::size_t apostrophe_len(std::string_view text, std::size_t i) {
  if (i >= text.size()) return 0;
  if (text[i] == '\'') return 1;
  if (starts_with_at(text, i, kRightSingle)) return kRightSingle.size();
  return 0;
}

// Word-forming character: ASCII alnum or a non-ASCII byte sequence that is
// not one of the punctuation/space sequences above.
std::size_t word_char_len(std::string_view text, std::size_t i) {
  if (i >= text.size()) return 0;
  const unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 0x80) return is_ascii_alnum(text[i]) ? 1 : 0;
  if (multibyte_punct(text, i) || starts_with_at(text, i, kNbsp)) return 0;
  return std::min(utf8_length(c), text.size() - i);
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_closing(std::string_view text, std::size_t i, std::size_t* len) {
  const char c = text[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') {
    *len = 1;
    return true;
  }
  for (std::string_view p : {kRightDouble, kRightSingle}) {
    if (starts_with_at(text, i, p)) {
      *len = p.size();
      return true;
    }
  }
  return false;
}

bool opens_sentence(std::string_view text, std::size_t k) {
  const char c = text[k];
  if (is_ascii_upper(c) || c == '"' || c == '\'' || c == '(') return true;
  if (c == '@' && k + 1 < text.size() && is_ascii_alnum(text[k + 1])) {
    return true;
  }
  return starts_with_at(text, k, kLeftDouble) ||
         starts_with_at(text, k, kLeftSingle);
}

// Word (whitespace-delimited chunk) that ends with the period at `dot`,
// without leading brackets/quotes, lower-cased.
std::string chunk_ending_at(std::string_view text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !space_len(text, b - 1)) --b;
  while (b < dot && (text[b] == '(' || text[b] == '"' || text[b] == '\'' ||
                     text[b] == '[')) {
    ++b;
  }
  return lower_ascii(text.substr(b, dot - b + 1));
}

// Matches ([A-Za-z]\.){2,} at i; returns the length or 0.
std::size_t initialism_len(std::string_view text, std::size_t i) {
  std::size_t j = i;
  int pairs = 0;
  while (j + 1 < text.size() && is_ascii_alpha(text[j]) && text[j + 1] == '.') {
    j += 2;
    ++pairs;
  }
  if (pairs < 2) return 0;
  return j - i;
}

bool is_clitic_tail(std::string_view lower) {
  return lower == "s" || lower == "m" || lower == "d" || lower == "re" ||
         lower == "ve" || lower == "ll";
}

}  // namespace

const std::vector<std::string_view>& abbreviations() {
  static const std::vector<std::string_view> kList = {
      "mr.",  "mrs.", "ms.",  "dr.",  "prof.", "sr.",  "jr.",
      "st.",  "vs.",  "etc.", "e.g.", "i.e.",  "u.s.", "a.m.",
      "p.m.", "inc.", "ltd.", "co.",  "mt.",   "jan.", "feb.",
      "aug.", "sept.", "oct.", "nov.", "dec."};
  return kList;
}

bool is_abbreviation(std::string_view word_with_period) {
  const std::string lower = lower_ascii(word_with_period);
  const auto& list = abbreviations();
  return std::find(list.begin(), list.end(), lower) != list.end();
}

std::vector<CharSpan> split_sentence_spans(std::string_view text) {
  std::vector<CharSpan> spans;
  auto push = [&](std::size_t b, std::size_t e) {
    while (b < e && space_len(text, b)) b += space_len(text, b);
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    while (e >= b + 2 && starts_with_at(text, e - 2, kNbsp)) e -= 2;
    if (e > b) spans.push_back({b, e});
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && (text[j] == '.' || text[j] == '!' || text[j] == '?')) {
      ++j;
    }
    std::size_t len = 0;
    while (j < text.size() && is_closing(text, j, &len)) j += len;

    // Abbreviation guard: only a lone period can close an abbreviation.
    if (c == '.' && j == i + 1 && is_abbreviation(chunk_ending_at(text, i))) {
      i = j;
      continue;
    }
    if (j >= text.size()) {
      push(start, j);
      start = j;
      i = j;
      continue;
    }
    if (!space_len(text, j)) {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < text.size() && space_len(text, k)) k += space_len(text, k);
    if (k >= text.size() || opens_sentence(text, k)) {
      push(start, j);
      start = k;
    }
    i = k;
  }
  push(start, text.size());
  return spans;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  for (const CharSpan& s : split_sentence_spans(text)) {
    out.emplace_back(text.substr(s.begin, s.size()));
  }
  return out;
}

std::vector<Token> tokenize(std::string_view s, std::size_t offset) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t b, std::size_t e, bool anon = false) {
    tokens.push_back(Token{std::string(s.substr(b, e - b)), anon,
                           CharSpan{offset + b, offset + e}});
  };

  std::size_t i = 0;
  while (i < s.size()) {
    if (const std::size_t sp = space_len(s, i)) {
      i += sp;
      continue;
    }

    // Anonymisation placeholder: '@' + alnum run.
    if (s[i] == '@' && i + 1 < s.size() && is_ascii_alnum(s[i + 1])) {
      std::size_t j = i + 1;
      while (j < s.size() && is_ascii_alnum(s[j])) ++j;
      emit(i, j, true);
      i = j;
      continue;
    }

    // Apostrophe-initial clitic: 's 'm 'd 're 've 'll.
    if (const std::size_t ap = apostrophe_len(s, i)) {
      std::size_t j = i + ap;
      while (j < s.size() && is_ascii_alpha(s[j])) ++j;
      const std::string tail = lower_ascii(s.substr(i + ap, j - i - ap));
      if (is_clitic_tail(tail) && !word_char_len(s, j)) {
        emit(i, j);
        i = j;
      } else {
        emit(i, i + ap);
        i += ap;
      }
      continue;
    }

    if (word_char_len(s, i)) {
      if (const std::size_t init = initialism_len(s, i)) {
        emit(i, i + init);
        i += init;
        continue;
      }
      std::size_t j = i;
      while (j < s.size()) {
        if (const std::size_t w = word_char_len(s, j)) {
          j += w;
          continue;
        }
        // Internal hyphen joins two word characters.
        if (s[j] == '-' && j > i && word_char_len(s, j + 1)) {
          ++j;
          continue;
        }
        // Decimal point / thousands separator between digits.
        if ((s[j] == '.' || s[j] == ',') && is_ascii_digit(s[j - 1]) &&
            j + 1 < s.size() && is_ascii_digit(s[j + 1])) {
          ++j;
          continue;
        }
        break;
      }

      // Abbreviation keeps its period.
      if (j < s.size() && s[j] == '.' &&
          is_abbreviation(std::string(s.substr(i, j - i)) + ".")) {
        emit(i, j + 1);
        i = j + 1;
        continue;
      }

      // Negative contraction: "don't" -> "do" + "n't".
      const std::size_t ap = apostrophe_len(s, j);
      if (ap && (s[j - 1] == 'n' || s[j - 1] == 'N') && j + ap < s.size() &&
          (s[j + ap] == 't' || s[j + ap] == 'T') &&
          !word_char_len(s, j + ap + 1)) {
        if (j - 1 > i) emit(i, j - 1);
        emit(j - 1, j + ap + 1);
        i = j + ap + 1;
        continue;
      }

      emit(i, j);
      i = j;
      continue;
    }

    // Everything else is a single punctuation/symbol character.
    std::size_t len = multibyte_punct(s, i);
    if (!len) len = std::min(utf8_length(static_cast<unsigned char>(s[i])), s.size() - i);
    emit(i, i + len);
    i += len;
  }
  return tokens;
}

std::vector<std::vector<Token>> tokenize_essay(std::string_view text) {
  std::vector<std::vector<Token>> out;
  for (const CharSpan& span : split_sentence_spans(text)) {
    auto toks = tokenize(text.substr(span.begin, span.size()), span.begin);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

bool is_word(std::string_view surface) {
  for (std::size_t i = 0; i < surface.size(); ++i) {
    if (word_char_len(surface, i)) return true;
  }
  return false;
}

std::string normalize_quotes(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  for (std::size_t i = 0; i < surface.size();) {
    if (starts_with_at(surface, i, kLeftSingle) ||
        starts_with_at(surface, i, kRightSingle)) {
      out += '\'';
      i += 3;
    } else if (starts_with_at(surface, i, kLeftDouble) ||
               starts_with_at(surface, i, kRightDouble)) {
      out += '"';
      i += 3;
    } else {
      out += surface[i++];
    }
  }
  return out;
}

}  // namespace essayscore::text
