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

#include "essayscore/common/io.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "essayscore/common/checksum.h"
#include "essayscore/common/error.h"

#ifndef ESSAYSCORE_DEFAULT_DATA_DIR
#define ESSAYSCORE_DEFAULT_DATA_DIR "data"
#endif

namespace essayscore {

std::string to_hex(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("short write to " + path.string());
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const std::size_t b = text.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const std::size_t e = text.find_last_not_of(kSpace);
  return text.substr(b, e - b + 1);
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("ESSAYSCORE_DATA_DIR"); env && *env) {
    return env;
  }
  return ESSAYSCORE_DEFAULT_DATA_DIR;
}

std::vector<std::string> read_checked_list(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::vector<std::string> entries;
  std::string expected;
  Fnv1a64 hash;
  bool first = true;
  for (std::string_view line : split_lines(text)) {
    if (!line.empty() && line.front() == '#') {
      constexpr std::string_view kTag = "# fnv1a64 ";
      if (expected.empty() && line.starts_with(kTag)) {
        expected = std::string(trim(line.substr(kTag.size())));
      }
      continue;
    }
    if (line.empty()) continue;
    if (!first) hash.update("\n");
    hash.update(line);
    first = false;
    entries.emplace_back(line);
  }
  if (expected.empty()) {
    throw DataError(path.string() + ": missing fnv1a64 checksum header");
  }
  if (to_hex(hash.digest()) != expected) {
    throw DataError(path.string() + ": checksum mismatch (expected " +
                    expected + ", got " + to_hex(hash.digest()) + ")");
  }
  return entries;
}

std::string format_checked_list(const std::vector<std::string>& entries,
                                std::string_view comment) {
  Fnv1a64 hash;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) hash.update("\n");
    hash.update(entries[i]);
  }
  std::string out = "# fnv1a64 " + to_hex(hash.digest()) + "\n";
  if (!comment.empty()) {
    for (std::string_view line : split_lines(comment)) {
      out += "# ";
      out += line;
      out += '\n';
    }
  }
  for (const std::string& e : entries) {
    out += e;
    out += '\n';
  }
  return out;
}

}  // namespace essayscore
