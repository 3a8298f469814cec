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

#include "essayscore/nn/checkpoint.h"

#include <bit>
#include <cstring>

#include "essayscore/common/checksum.h"
#include "essayscore/common/error.h"
#include "essayscore/common/io.h"

namespace essayscore::nn {
namespace {

constexpr char kMagic[8] = {'E', 'S', 'S', 'C', 'K', 'P', 'T', '\n'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  void raw(const void* p, std::size_t n) { out_.append(static_cast<const char*>(p), n); }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int b = 0; b < 4; ++b) u8(static_cast<std::uint8_t>(v >> (8 * b)));
  }
  void u64(std::uint64_t v) {
    for (int b = 0; b < 8; ++b) u8(static_cast<std::uint8_t>(v >> (8 * b)));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void str(const std::string& s) {
    u64(s.size());
    out_ += s;
  }
  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  void need(std::size_t n) {
    if (in_.size() - pos_ < n) throw DataError("checkpoint truncated at byte " + std::to_string(pos_));
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(in_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(u8()) << (8 * b);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(u8()) << (8 * b);
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::uint64_t count(std::size_t min_bytes_each) {
    const std::uint64_t n = u64();
    if (min_bytes_each > 0 && n > (in_.size() - pos_) / min_bytes_each) {
      throw DataError("checkpoint declares " + std::to_string(n) + " entries past end of file");
    }
    return n;
  }
  std::string str() {
    const std::uint64_t n = count(1);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_checkpoint(const Checkpoint& ckpt) {
  Writer w;
  w.raw(kMagic, sizeof kMagic);
  w.u32(kVersion);
  const ModelConfig& cfg = ckpt.params.config();
  for (std::size_t v : {cfg.vocab_size, cfg.embedding_dim, cfg.filters, cfg.window, cfg.hidden,
                        cfg.feature_dim}) {
    w.u64(v);
  }
  w.u8(cfg.use_sequence ? 1 : 0);
  w.f64(cfg.dropout);
  w.str(std::string(text::to_string(ckpt.vocabulary.mode())));
  w.u64(ckpt.vocabulary.size());
  for (const auto& e : ckpt.vocabulary.entries()) w.str(e);
  w.u64(ckpt.registry_fingerprint);
  const auto& ranges = ckpt.normalization.ranges();
  w.u64(ranges.size());
  for (const auto& [set, r] : ranges) {
    w.i32(set);
    w.u64(r.size());
    for (const auto& [lo, hi] : r) {
      w.f64(lo);
      w.f64(hi);
    }
  }
  w.u64(ckpt.metadata.size());
  for (const auto& [key, value] : ckpt.metadata) {
    w.str(key);
    w.str(value);
  }
  w.u64(kNumGroups);
  for (std::size_t gi = 0; gi < kNumGroups; ++gi) {
    const Group g = group_from_index(gi);
    w.str(std::string(group_name(g)));
    w.u64(ckpt.params.rows(g));
    w.u64(ckpt.params.cols(g));
    for (double v : ckpt.params.span(g)) w.f64(v);
  }
  w.u64(fnv1a64(w.bytes()));
  return std::move(w.bytes());
}

Checkpoint parse_checkpoint(const std::string& bytes) {
  if (bytes.size() < sizeof kMagic + 12 || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw DataError("not an essayscore checkpoint");
  }
  const std::string_view body(bytes.data(), bytes.size() - 8);
  Reader trailer(std::string_view(bytes).substr(bytes.size() - 8));
  if (trailer.u64() != fnv1a64(body)) throw DataError("checkpoint checksum mismatch");

  Reader r(body.substr(sizeof kMagic));
  if (const auto version = r.u32(); version != kVersion) {
    throw DataError("unsupported checkpoint version " + std::to_string(version));
  }
  ModelConfig cfg;
  cfg.vocab_size = r.u64();
  cfg.embedding_dim = r.u64();
  cfg.filters = r.u64();
  cfg.window = r.u64();
  cfg.hidden = r.u64();
  cfg.feature_dim = r.u64();
  cfg.use_sequence = r.u8() != 0;
  cfg.dropout = r.f64();

  Checkpoint ckpt;
  const auto mode = text::parse_embedding_mode(r.str());
  std::vector<std::string> entries(r.count(8));
  for (auto& e : entries) e = r.str();
  ckpt.vocabulary = text::Vocabulary::from_entries(mode, std::move(entries));
  ckpt.registry_fingerprint = r.u64();

  std::map<int, std::vector<features::NormalizationStats::Range>> ranges;
  for (std::uint64_t n = r.count(12); n > 0; --n) {
    const int set = r.i32();
    auto& rs = ranges[set];
    rs.resize(r.count(16));
    for (auto& [lo, hi] : rs) {
      lo = r.f64();
      hi = r.f64();
    }
  }
  ckpt.normalization = features::NormalizationStats::from_ranges(std::move(ranges));
  for (std::uint64_t n = r.count(16); n > 0; --n) {
    std::string key = r.str();
    ckpt.metadata.emplace_back(std::move(key), r.str());
  }

  ckpt.params = Params(cfg);
  if (r.u64() != kNumGroups) throw DataError("checkpoint parameter group count mismatch");
  for (std::size_t gi = 0; gi < kNumGroups; ++gi) {
    const Group g = group_from_index(gi);
    const std::string name = r.str();
    const std::uint64_t rows = r.u64(), cols = r.u64();
    if (name != group_name(g) || rows != ckpt.params.rows(g) || cols != ckpt.params.cols(g)) {
      throw DataError("checkpoint parameter " + name + " [" + std::to_string(rows) + "x" +
                      std::to_string(cols) + "] does not match the stored configuration");
    }
    for (double& v : ckpt.params.span(g)) v = r.f64();
  }
  if (!r.done()) throw DataError("trailing bytes in checkpoint");
  if (cfg.use_sequence && ckpt.vocabulary.size() != cfg.vocab_size) {
    throw DataError("checkpoint vocabulary size does not match embedding rows");
  }
  return ckpt;
}

void save_checkpoint(const std::string& path, const Checkpoint& ckpt) {
  write_file(path, serialize_checkpoint(ckpt));
}

Checkpoint load_checkpoint(const std::string& path) { return parse_checkpoint(read_file(path)); }

}  // namespace essayscore::nn
