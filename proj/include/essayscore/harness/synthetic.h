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

#ifndef ESSAYSCORE_HARNESS_SYNTHETIC_H_
#define ESSAYSCORE_HARNESS_SYNTHETIC_H_

#include <cstdint>
#include <string>

#include "essayscore/harness/dataset.h"

namespace essayscore::harness {

// Essays in the eight ASAP score ranges whose length, vocabulary and
// sentence structure grow with the score. For tests and demos only.
Dataset make_synthetic_dataset(std::size_t essays_per_set, std::uint64_t seed);

// ASAP-style TSV (essay_id, essay_set, essay, domain1_score) in UTF-8;
// essays are written as quoted fields.
std::string format_dataset_tsv(const Dataset& dataset);

}  // namespace essayscore::harness

#endif  // ESSAYSCORE_HARNESS_SYNTHETIC_H_
