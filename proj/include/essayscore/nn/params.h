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

#ifndef ESSAYSCORE_NN_PARAMS_H_
#define ESSAYSCORE_NN_PARAMS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace essayscore::nn {

struct ModelConfig {
  std::size_t vocab_size = 0;
  std::size_t embedding_dim = 50;
  std::size_t filters = 100;
  std::size_t window = 5;
  std::size_t hidden = 100;
  std::size_t feature_dim = 86;  // 0 when features are off
  bool use_sequence = true;      // false: features-only linear-sigmoid model
  double dropout = 0.5;

  // Width of e = [o; f].
  std::size_t output_dim() const { return (use_sequence ? hidden : 0) + feature_dim; }

  // Throws Error for inconsistent settings.
  void validate() const;

  bool operator==(const ModelConfig&) const = default;
};

enum class Group : int {
  kE, kWz, kBz,
  kWm, kBm, kWu,
  kWi, kWf, kWc, kWo,
  kUi, kUf, kUc, kUo,
  kBi, kBf, kBc, kBo,
  kWa, kBa, kWalpha,
  kWy, kBy,
  kCount
};

inline constexpr std::size_t kNumGroups = static_cast<std::size_t>(Group::kCount);

std::string_view group_name(Group g);
Group group_from_index(std::size_t i);

struct MatrixView {
  double* data = nullptr;
  std::size_t rows = 0, cols = 0;

  double& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double* row(std::size_t r) const { return data + r * cols; }
  std::size_t size() const { return rows * cols; }
};

struct ConstMatrixView {
  const double* data = nullptr;
  std::size_t rows = 0, cols = 0;

  ConstMatrixView() = default;
  ConstMatrixView(const double* d, std::size_t r, std::size_t c) : data(d), rows(r), cols(c) {}
  ConstMatrixView(const MatrixView& m) : data(m.data), rows(m.rows), cols(m.cols) {}

  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  const double* row(std::size_t r) const { return data + r * cols; }
  std::size_t size() const { return rows * cols; }
};

// Every trainable array in one contiguous buffer. Gradients and optimizer
// accumulators reuse the same layout. Groups unused by a configuration
// have zero size.
class Params {
 public:
  Params() = default;
  explicit Params(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  std::span<double> flat() { return data_; }
  std::span<const double> flat() const { return data_; }

  MatrixView view(Group g);
  ConstMatrixView view(Group g) const;
  std::span<double> span(Group g);
  std::span<const double> span(Group g) const;
  std::size_t offset(Group g) const { return shapes_[index(g)].offset; }
  std::size_t rows(Group g) const { return shapes_[index(g)].rows; }
  std::size_t cols(Group g) const { return shapes_[index(g)].cols; }
  std::size_t size(Group g) const { return rows(g) * cols(g); }

  // Group owning flat index i.
  Group group_of(std::size_t i) const;

  void zero();

  bool operator==(const Params& other) const {
    return config_ == other.config_ && data_ == other.data_;
  }

 private:
  struct Shape {
    std::size_t offset = 0, rows = 0, cols = 0;
  };
  static std::size_t index(Group g) { return static_cast<std::size_t>(g); }

  ModelConfig config_;
  std::array<Shape, kNumGroups> shapes_{};
  std::vector<double> data_;
};

// Glorot-uniform weights, zero biases except b_f = 1, embeddings
// U(-0.05, 0.05) with the PAD row zero.
Params init_params(const ModelConfig& config, std::uint64_t seed);

}  // namespace essayscore::nn

#endif  // ESSAYSCORE_NN_PARAMS_H_
