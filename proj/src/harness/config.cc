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

#include "essayscore/harness/config.h"

#include <charconv>
#include <string>

#include "essayscore/common/error.h"

namespace essayscore::harness {
namespace {

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw Error("bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (!(subsample > 0.0 && subsample <= 1.0)) throw Error("subsample fraction must be in (0, 1]");
  if (batch == 0) throw Error("batch size must be positive");
  if (epochs == 0) throw Error("epochs must be positive");
  if (mode == text::EmbeddingMode::kNone && !use_features) {
    throw Error("mode none needs features on");
  }
  if (!(dev_fraction >= 0.0 && dev_fraction < 1.0)) throw Error("dev fraction must be in [0, 1)");
  if (!(learning_rate > 0.0)) throw Error("learning rate must be positive");
  if (clip < 0.0) throw Error("clip must be non-negative");
  if (caps.max_sentences == 0 || caps.max_tokens == 0) throw Error("tensor caps must be positive");
  model_config(2).validate();
}

nn::ModelConfig RunConfig::model_config(std::size_t vocab_size) const {
  nn::ModelConfig c;
  c.vocab_size = vocab_size;
  c.embedding_dim = embedding_dim;
  c.filters = filters;
  c.window = window;
  c.hidden = hidden;
  c.feature_dim = use_features ? 86 : 0;
  c.use_sequence = mode != text::EmbeddingMode::kNone;
  c.dropout = dropout;
  return c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::key_values() const {
  return {
      {"mode", std::string(text::to_string(mode))},
      {"features", use_features ? "on" : "off"},
      {"seed", std::to_string(seed)},
      {"batch", std::to_string(batch)},
      {"epochs", std::to_string(epochs)},
      {"subsample", num(subsample)},
      {"out", out_dir},
      {"max-sentences", std::to_string(caps.max_sentences)},
      {"max-tokens", std::to_string(caps.max_tokens)},
      {"embedding-dim", std::to_string(embedding_dim)},
      {"filters", std::to_string(filters)},
      {"window", std::to_string(window)},
      {"hidden", std::to_string(hidden)},
      {"dropout", num(dropout)},
      {"clip", num(clip)},
      {"learning-rate", num(learning_rate)},
      {"dev-fraction", num(dev_fraction)},
      {"word-min-count", std::to_string(word_min_count)},
  };
}

bool RunConfig::set(std::string_view key, std::string_view value) {
  auto size = [&] { return parse_number<std::size_t>(key, value); };
  auto real = [&] { return parse_number<double>(key, value); };
  if (key == "mode") {
    mode = text::parse_embedding_mode(value);
  } else if (key == "features") {
    if (value != "on" && value != "off") throw Error("features must be on or off");
    use_features = value == "on";
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "batch") {
    batch = size();
  } else if (key == "epochs") {
    epochs = size();
  } else if (key == "subsample") {
    subsample = real();
  } else if (key == "out") {
    out_dir = std::string(value);
  } else if (key == "max-sentences") {
    caps.max_sentences = size();
  } else if (key == "max-tokens") {
    caps.max_tokens = size();
  } else if (key == "embedding-dim") {
    embedding_dim = size();
  } else if (key == "filters") {
    filters = size();
  } else if (key == "window") {
    window = size();
  } else if (key == "hidden") {
    hidden = size();
  } else if (key == "dropout") {
    dropout = real();
  } else if (key == "clip") {
    clip = real();
  } else if (key == "learning-rate") {
    learning_rate = real();
  } else if (key == "dev-fraction") {
    dev_fraction = real();
  } else if (key == "word-min-count") {
    word_min_count = parse_number<int>(key, value);
  } else {
    return false;
  }
  return true;
}

}  // namespace essayscore::harness
