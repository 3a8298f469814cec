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

#ifndef ESSAYSCORE_TEXT_PIPELINE_H_
#define ESSAYSCORE_TEXT_PIPELINE_H_

#include <map>
#include <string>
#include <string_view>

#include "essayscore/text/perceptron_tagger.h"
#include "essayscore/text/token.h"

namespace essayscore::text {

// Decodes Windows-1252 bytes to UTF-8. The five undefined code points
// (0x81, 0x8D, 0x8F, 0x90, 0x9D) become U+FFFD.
std::string decode_cp1252(std::string_view bytes);

// Sentence split, tokenize and tag.
TaggedEssay analyze(std::string_view text, const PerceptronTagger& tagger);
TaggedEssay analyze(std::string_view text);  // bundled tagger

// Pre-tagged format: one "token<TAB>tag" line per token, a blank line
// after every sentence. In multi-essay files a line "#essay_id=<id>" starts
// each essay. Spans are synthesised as if tokens were joined by spaces.
std::string format_pretagged(const TaggedEssay& essay);
TaggedEssay parse_pretagged(std::string_view contents);
std::map<std::string, TaggedEssay> parse_pretagged_collection(
    std::string_view contents);

}  // namespace essayscore::text

#endif  // ESSAYSCORE_TEXT_PIPELINE_H_
