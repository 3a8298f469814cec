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

#include "essayscore/harness/dataset.h"

#include <charconv>
#include <map>
#include <set>
#include <unordered_set>

#include "essayscore/common/checksum.h"
#include "essayscore/common/error.h"
#include "essayscore/common/io.h"
#include "essayscore/metrics/prompt.h"
#include "essayscore/text/pipeline.h"

namespace essayscore::harness {
namespace {

struct Row {
  std::size_t line = 0;  // 1-based line where the row starts
  std::vector<std::string> fields;
};

std::vector<Row> parse_tsv(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  std::size_t line = 1;
  row.line = 1;
  bool at_field_start = true, quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && at_field_start) {
      quoted = true;
      at_field_start = false;
      any = true;
      continue;
    }
    if (c == '\t') {
      row.fields.push_back(std::move(field));
      field.clear();
      at_field_start = true;
      any = true;
      continue;
    }
    if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.fields.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      field.clear();
      row = Row{};
      ++line;
      row.line = line;
      at_field_start = true;
      any = false;
      continue;
    }
    field += c;
    at_field_start = false;
    any = true;
  }
  if (quoted) throw DataError("unterminated quoted field starting on line " + std::to_string(row.line));
  if (any || !field.empty()) {
    row.fields.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  // Some exports write integral scores as "8.0".
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    if (s.substr(dot + 1).find_first_not_of('0') != std::string_view::npos) return false;
    s = s.substr(0, dot);
  }
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<std::size_t> Dataset::indices_of_set(int essay_set) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < essays.size(); ++i) {
    if (essays[i].essay_set == essay_set) out.push_back(i);
  }
  return out;
}

Dataset parse_dataset(std::string_view bytes, std::string_view source) {
  Dataset ds;
  ds.checksum = fnv1a64(bytes);
  const std::string text = text::decode_cp1252(bytes);
  const auto rows = parse_tsv(text);
  const std::string where(source);
  if (rows.empty()) throw DataError(where + ": no essays");
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < rows[0].fields.size(); ++i) col.emplace(std::string(trim(rows[0].fields[i])), i);
  std::size_t need[4];
  const char* names[4] = {"essay_id", "essay_set", "essay", "domain1_score"};
  for (int k = 0; k < 4; ++k) {
    auto it = col.find(names[k]);
    if (it == col.end()) throw DataError(where + ": missing column '" + names[k] + "'");
    need[k] = it->second;
  }
  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const Row& row = rows[r];
    const std::string ctx = where + ":" + std::to_string(row.line);
    std::size_t max_col = 0;
    for (auto c : need) max_col = std::max(max_col, c);
    if (row.fields.size() <= max_col) {
      throw DataError(ctx + ": malformed row with " + std::to_string(row.fields.size()) +
                      " fields, header has " + std::to_string(rows[0].fields.size()));
    }
    Essay e;
    e.essay_id = std::string(trim(row.fields[need[0]]));
    if (e.essay_id.empty()) throw DataError(ctx + ": empty essay_id");
    if (!parse_int(row.fields[need[1]], e.essay_set)) {
      throw DataError(ctx + ": essay " + e.essay_id + " has malformed essay_set '" +
                      row.fields[need[1]] + "'");
    }
    if (e.essay_set < 1 || e.essay_set > 8) {
      throw DataError(ctx + ": essay " + e.essay_id + " has essay_set " +
                      std::to_string(e.essay_set) + ", expected 1..8");
    }
    e.text = row.fields[need[2]];
    const std::string_view gold = trim(row.fields[need[3]]);
    if (gold.empty()) {
      ds.warnings.push_back(ctx + ": essay " + e.essay_id + " has no domain1_score, skipped");
      continue;
    }
    if (!parse_int(gold, e.score)) {
      throw DataError(ctx + ": essay " + e.essay_id + " has malformed domain1_score '" +
                      std::string(gold) + "'");
    }
    const auto& meta = metrics::prompt_meta(e.essay_set);
    if (!meta.contains(e.score)) {
      throw DataError(ctx + ": essay " + e.essay_id + " score " + std::to_string(e.score) +
                      " outside " + std::to_string(meta.score_min) + ".." +
                      std::to_string(meta.score_max) + " for set " + std::to_string(e.essay_set));
    }
    if (!seen.insert(e.essay_id).second) throw DataError(ctx + ": duplicate essay_id " + e.essay_id);
    ds.essays.push_back(std::move(e));
  }
  if (ds.essays.empty()) throw DataError(where + ": no essays");
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_file(path), path.string());
}

std::vector<SetStats> dataset_stats(const Dataset& dataset) {
  std::map<int, SetStats> by_set;
  std::map<int, double> words;
  for (const Essay& e : dataset.essays) {
    SetStats& s = by_set[e.essay_set];
    s.essay_set = e.essay_set;
    ++s.count;
    const auto& meta = metrics::prompt_meta(e.essay_set);
    s.min_score_count += e.score == meta.score_min;
    s.max_score_count += e.score == meta.score_max;
    std::size_t n = 0;
    bool in_word = false;
    for (char c : e.text) {
      const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
      if (!space && !in_word) ++n;
      in_word = !space;
    }
    words[e.essay_set] += static_cast<double>(n);
  }
  std::vector<SetStats> out;
  for (auto& [set, s] : by_set) {
    s.mean_length = words[set] / static_cast<double>(s.count);
    out.push_back(s);
  }
  return out;
}

}  // namespace essayscore::harness
