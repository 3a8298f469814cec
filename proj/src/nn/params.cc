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

#include "essayscore/nn/params.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "essayscore/common/error.h"
#include "essayscore/common/random.h"

namespace essayscore::nn {
namespace {

constexpr std::array<std::string_view, kNumGroups> kNames = {
    "E",   "W_z", "b_z", "W_m", "b_m", "w_u", "W_i", "W_f",     "W_c", "W_o", "U_i", "U_f",
    "U_c", "U_o", "b_i", "b_f", "b_c", "b_o", "W_a", "b_a", "w_alpha", "w_y", "b_y"};

bool is_bias(Group g) {
  switch (g) {
    case Group::kBz: case Group::kBm: case Group::kBi: case Group::kBf:
    case Group::kBc: case Group::kBo: case Group::kBa: case Group::kBy:
      return true;
    default:
      return false;
  }
}

}  // namespace

void ModelConfig::validate() const {
  if (!use_sequence && feature_dim == 0) {
    throw Error("model has neither a sequence encoder nor features");
  }
  if (use_sequence) {
    if (vocab_size < 2) throw Error("vocabulary must hold at least PAD and UNK");
    if (embedding_dim == 0 || filters == 0 || hidden == 0 || window == 0) {
      throw Error("model dimensions must be positive");
    }
    if (window % 2 == 0) throw Error("convolution window must be odd");
  }
  if (!(dropout >= 0.0 && dropout < 1.0)) throw Error("dropout rate must be in [0, 1)");
}

std::string_view group_name(Group g) { return kNames[static_cast<std::size_t>(g)]; }

Group group_from_index(std::size_t i) {
  if (i >= kNumGroups) throw Error("parameter group index out of range");
  return static_cast<Group>(i);
}

Params::Params(const ModelConfig& config) : config_(config) {
  config.validate();
  const std::size_t d = config.embedding_dim, f = config.filters, h = config.hidden;
  auto set = [this](Group g, std::size_t rows, std::size_t cols) {
    shapes_[index(g)].rows = rows;
    shapes_[index(g)].cols = cols;
  };
  if (config.use_sequence) {
    set(Group::kE, config.vocab_size, d);
    set(Group::kWz, f, config.window * d);
    set(Group::kBz, 1, f);
    set(Group::kWm, f, f);
    set(Group::kBm, 1, f);
    set(Group::kWu, 1, f);
    for (Group g : {Group::kWi, Group::kWf, Group::kWc, Group::kWo}) set(g, h, f);
    for (Group g : {Group::kUi, Group::kUf, Group::kUc, Group::kUo}) set(g, h, h);
    for (Group g : {Group::kBi, Group::kBf, Group::kBc, Group::kBo}) set(g, 1, h);
    set(Group::kWa, h, h);
    set(Group::kBa, 1, h);
    set(Group::kWalpha, 1, h);
  }
  set(Group::kWy, 1, config.output_dim());
  set(Group::kBy, 1, 1);
  std::size_t offset = 0;
  for (auto& s : shapes_) {
    s.offset = offset;
    offset += s.rows * s.cols;
  }
  data_.assign(offset, 0.0);
}

MatrixView Params::view(Group g) {
  const auto& s = shapes_[index(g)];
  return {data_.data() + s.offset, s.rows, s.cols};
}

ConstMatrixView Params::view(Group g) const {
  const auto& s = shapes_[index(g)];
  return {data_.data() + s.offset, s.rows, s.cols};
}

std::span<double> Params::span(Group g) {
  return std::span<double>(data_).subspan(offset(g), size(g));
}

std::span<const double> Params::span(Group g) const {
  return std::span<const double>(data_).subspan(offset(g), size(g));
}

Group Params::group_of(std::size_t i) const {
  for (std::size_t g = 0; g < kNumGroups; ++g) {
    const auto& s = shapes_[g];
    if (i >= s.offset && i < s.offset + s.rows * s.cols) return static_cast<Group>(g);
  }
  throw Error("flat parameter index " + std::to_string(i) + " out of range");
}

void Params::zero() { std::fill(data_.begin(), data_.end(), 0.0); }

Params init_params(const ModelConfig& config, std::uint64_t seed) {
  Params p(config);
  Rng rng(seed);
  for (std::size_t gi = 0; gi < kNumGroups; ++gi) {
    const Group g = static_cast<Group>(gi);
    auto v = p.view(g);
    if (v.size() == 0) continue;
    if (g == Group::kE) {
      for (std::size_t r = 1; r < v.rows; ++r) {
        for (std::size_t c = 0; c < v.cols; ++c) v(r, c) = rng.uniform(-0.05, 0.05);
      }
    } else if (is_bias(g)) {
      std::fill(v.data, v.data + v.size(), g == Group::kBf ? 1.0 : 0.0);
    } else {
      const double bound = std::sqrt(6.0 / static_cast<double>(v.rows + v.cols));
      for (std::size_t k = 0; k < v.size(); ++k) v.data[k] = rng.uniform(-bound, bound);
    }
  }
  return p;
}

}  // namespace essayscore::nn
