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

#include "essayscore/text/pipeline.h"

#include <array>

#include "essayscore/common/error.h"
#include "essayscore/common/io.h"
#include "essayscore/text/tokenizer.h"

namespace essayscore::text {
namespace {

// Code points for bytes 0x80..0x9F; 0 marks the undefined slots.
constexpr std::array<char32_t, 32> kHighTable = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

std::string decode_cp1252(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size() + bytes.size() / 8);
  for (unsigned char b : bytes) {
    if (b < 0x80) {
      out += static_cast<char>(b);
    } else if (b < 0xA0) {
      const char32_t cp = kHighTable[b - 0x80];
      append_utf8(out, cp ? cp : 0xFFFD);
    } else {
      append_utf8(out, b);
    }
  }
  return out;
}

TaggedEssay analyze(std::string_view text, const PerceptronTagger& tagger) {
  TaggedEssay essay;
  for (auto& tokens : tokenize_essay(text)) {
    essay.push_back(tagger.tag(std::move(tokens)));
  }
  return essay;
}

TaggedEssay analyze(std::string_view text) {
  return analyze(text, PerceptronTagger::bundled());
}

std::string format_pretagged(const TaggedEssay& essay) {
  std::string out;
  for (const auto& sentence : essay) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      out += sentence.tokens[i].surface;
      out += '\t';
      out += tag_name(sentence.tags[i]);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::map<std::string, TaggedEssay> parse_pretagged_collection(
    std::string_view contents) {
  std::map<std::string, TaggedEssay> essays;
  constexpr std::string_view kIdTag = "#essay_id=";
  std::string current;
  TaggedEssay* essay = &essays[current];
  TaggedSentence sentence;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!sentence.tokens.empty()) essay->push_back(std::move(sentence));
    sentence = {};
  };
  for (std::string_view line : split_lines(contents)) {
    ++line_no;
    if (line.starts_with(kIdTag)) {
      flush();
      current = std::string(trim(line.substr(kIdTag.size())));
      essay = &essays[current];
      offset = 0;
      continue;
    }
    if (trim(line).empty()) {
      flush();
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw DataError("pretagged line " + std::to_string(line_no) +
                      ": expected token<TAB>tag");
    }
    const std::string_view surface = line.substr(0, tab);
    const std::string_view tag = trim(line.substr(tab + 1));
    const auto id = tag_id(tag);
    if (!id) {
      throw DataError("pretagged line " + std::to_string(line_no) +
                      ": unknown tag '" + std::string(tag) + "'");
    }
    Token token;
    token.surface = std::string(surface);
    token.is_anon_entity = surface.size() > 1 && surface.front() == '@';
    token.span = {offset, offset + surface.size()};
    offset += surface.size() + 1;
    sentence.tokens.push_back(std::move(token));
    sentence.tags.push_back(*id);
  }
  flush();
  if (essays.count("") && essays[""].empty()) essays.erase("");
  return essays;
}

TaggedEssay parse_pretagged(std::string_view contents) {
  auto all = parse_pretagged_collection(contents);
  if (all.empty()) return {};
  if (all.size() > 1) {
    throw DataError("pretagged input holds several essays; use the collection reader");
  }
  return std::move(all.begin()->second);
}

}  // namespace essayscore::text
