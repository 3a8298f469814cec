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

#ifndef ESSAYSCORE_COMMON_IO_H_
#define ESSAYSCORE_COMMON_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace essayscore {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

// Splits on '\n' and strips a trailing '\r' from every line.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

// Root of the bundled data files. $ESSAYSCORE_DATA_DIR wins over the
// compiled-in default.
std::filesystem::path data_dir();

// Reads a checksummed word list: lines beginning with '#' are comments, the
// first of them must be "# fnv1a64 <hex>" over the remaining lines joined
// with '\n'. Throws DataError on mismatch.
std::vector<std::string> read_checked_list(const std::filesystem::path& path);

// Builds the text of a checksummed list from its entries.
std::string format_checked_list(const std::vector<std::string>& entries,
                                std::string_view comment);

}  // namespace essayscore

#endif  // ESSAYSCORE_COMMON_IO_H_
