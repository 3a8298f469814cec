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

#ifndef ESSAYSCORE_HARNESS_DATASET_H_
#define ESSAYSCORE_HARNESS_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace essayscore::harness {

struct Essay {
  std::string essay_id;
  int essay_set = 0;
  std::string text;  // UTF-8
  int score = 0;     // domain1_score
};

struct Dataset {
  std::vector<Essay> essays;
  std::vector<std::string> warnings;
  std::uint64_t checksum = 0;  // FNV-1a 64 of the raw file bytes

  std::vector<std::size_t> indices_of_set(int essay_set) const;
};

// Tab-separated with a header naming at least essay_id, essay_set, essay
// and domain1_score. Bytes are decoded as Windows-1252. A field that
// starts with '"' is quoted ("" escapes a quote) and may span tabs and
// newlines. Rows without a gold score are skipped with a warning.
// Throws DataError for a missing column, a malformed row, an essay_set
// outside 1..8, a score outside its prompt's range, a duplicate essay_id,
// or when no essays remain.
Dataset parse_dataset(std::string_view bytes, std::string_view source = "<memory>");
Dataset load_dataset(const std::filesystem::path& path);

struct SetStats {
  int essay_set = 0;
  std::size_t count = 0;
  double mean_length = 0.0;  // whitespace-separated words
  std::size_t min_score_count = 0;
  std::size_t max_score_count = 0;
};

// One row per essay set present, ascending.
std::vector<SetStats> dataset_stats(const Dataset& dataset);

}  // namespace essayscore::harness

#endif  // ESSAYSCORE_HARNESS_DATASET_H_
