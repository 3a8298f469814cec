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

// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "essayscore/common/error.h"
#include "essayscore/common/random.h"
#include "essayscore/features/feature_vector.h"
#include "essayscore/features/registry.h"
#include "essayscore/harness/config.h"
#include "essayscore/harness/dataset.h"
#include "essayscore/harness/folds.h"
#include "essayscore/harness/report.h"
#include "essayscore/harness/synthetic.h"
#include "essayscore/harness/trainer.h"
#include "essayscore/metrics/prompt.h"
#include "essayscore/metrics/qwk.h"
#include "essayscore/nn/checkpoint.h"
#include "essayscore/nn/layers.h"
#include "essayscore/nn/model.h"
#include "essayscore/text/pipeline.h"
#include "feature_fixture.h"
#include "nn_fixtures.h"
#include "nn_oracle.h"
#include "qwk_oracle.h"

namespace essayscore {
namespace {

using Clock = std::chrono::steady_clock;

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kFail;
  std::string detail;
};

Outcome pass(std::string detail) { return {Status::kPass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Status::kFail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Status::kSkip, std::move(detail)}; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- 1 ----------------------------------------------------------------------

Outcome qwk_oracle_equivalence() {
  const auto start = Clock::now();
  Rng rng(20260101);
  double worst = 0.0;
  int degenerate = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int ratings = 2 + int(rng.below(9));
    const std::size_t n = 1 + rng.below(50);
    std::vector<int> h(n), p(n);
    for (auto& v : h) v = int(rng.below(std::size_t(ratings)));
    // Mix near-agreement and independent predictions.
    const bool close = rng.uniform() < 0.5;
    for (std::size_t i = 0; i < n; ++i) {
      if (close) {
        const int shift = int(rng.below(3)) - 1;
        p[i] = std::clamp(h[i] + shift, 0, ratings - 1);
      } else {
        p[i] = int(rng.below(std::size_t(ratings)));
      }
    }
    const auto expected = oracle::qwk_direct(h, p, ratings);
    double got = 0.0;
    try {
      got = metrics::qwk_detail(h, p, ratings).kappa;
    } catch (const NumericError&) {
      if (expected) return fail("library raised on a non-degenerate instance");
      continue;
    }
    if (!expected) {
      ++degenerate;
      if (got != 1.0) return fail("degenerate instance did not give K = 1");
      continue;
    }
    worst = std::max(worst, std::abs(got - *expected));
  }
  const std::vector<int> hh = {0, 1, 2, 2}, pp = {0, 1, 1, 2};
  const double hand = metrics::qwk_detail(hh, pp, 3).kappa;
  const double secs = seconds_since(start);
  std::string detail = "max |diff| " + fmt("%.3g", worst) + ", hand case " + fmt("%.17g", hand) +
                       ", " + std::to_string(degenerate) + " degenerate, " + fmt("%.2f", secs) +
                       " s";
  const bool hand_ok = hand == 0.8;
  if (worst <= 1e-9 && hand_ok && secs < 5.0) return pass(detail);
  return fail(detail);
}

// ---- 2 ----------------------------------------------------------------------

nn::ModelConfig tiny_config() {
  nn::ModelConfig c;
  c.vocab_size = 10;
  c.embedding_dim = 4;
  c.filters = 3;
  c.hidden = 5;
  c.feature_dim = 6;
  return c;
}

Outcome gradient_correctness() {
  const auto start = Clock::now();
  double worst = 0.0;
  std::string worst_group;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Rng rng(seed);
    nn::Params p = nn::init_params(tiny_config(), seed);
    testing::randomize(p, rng, 0.5);
    std::vector<text::EssayTensor> tensors;
    std::vector<std::vector<double>> features;
    std::vector<double> targets;
    for (int i = 0; i < 3; ++i) {
      tensors.push_back(testing::make_tensor(testing::random_sentences(rng, 2, 4, 10, true), 2, 4));
      std::vector<double> f(6);
      for (double& v : f) v = rng.uniform();
      features.push_back(f);
      targets.push_back(rng.uniform());
    }
    std::vector<nn::Example> batch;
    for (int i = 0; i < 3; ++i) batch.push_back({&tensors[i], features[i], targets[i]});
    for (bool dropout : {false, true}) {
      const auto check = testing::check_gradients(p, batch, dropout, seed + 100);
      for (std::size_t g = 0; g < nn::kNumGroups; ++g) {
        if (!check.present[g]) continue;
        if (check.relative_error[g] > worst) {
          worst = check.relative_error[g];
          worst_group = nn::group_name(nn::group_from_index(g));
        }
      }
    }
  }
  const double secs = seconds_since(start);
  const std::string detail = "worst group relative error " + fmt("%.3g", worst) + " (" +
                             worst_group + "), " + fmt("%.2f", secs) + " s";
  if (worst < 1e-4 && secs < 30.0) return pass(detail);
  return fail(detail);
}

// ---- 3 ----------------------------------------------------------------------

Outcome forward_oracle() {
  const nn::Params p = testing::hand_micro_network();
  const std::vector<std::vector<std::int32_t>> sentences = {{1, 2}};
  const auto tensor = testing::make_tensor(sentences, 1, 2);
  const std::vector<double> f = {0.25, 0.75};
  const double got = nn::predict(p, tensor, f);
  const double want = oracle::ref_forward(testing::to_ref(p), sentences, f);
  const double diff = std::abs(got - want);
  const std::string detail = "y " + fmt("%.17g", got) + ", |diff| " + fmt("%.3g", diff);
  if (diff <= 1e-12) return pass(detail);
  return fail(detail);
}

// ---- 4 ----------------------------------------------------------------------

Outcome attention_invariants() {
  Rng rng(404);
  double worst_sum = 0.0, worst_uniform = 0.0;
  int masked_nonzero = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const std::size_t dim = 1 + rng.below(6);
    const std::size_t att = 1 + rng.below(6);
    std::vector<double> W(att * dim), b(att), w(att);
    for (auto* v : {&W, &b, &w}) {
      for (double& x : *v) x = rng.uniform(-3.0, 3.0);
    }
    const bool equal_rows = trial % 5 == 0;
    std::vector<double> v(n * dim);
    for (double& x : v) x = rng.uniform(-2.0, 2.0);
    if (equal_rows) {
      for (std::size_t r = 1; r < n; ++r) std::copy_n(v.begin(), dim, v.begin() + r * dim);
    }
    std::vector<std::uint8_t> mask(n);
    std::size_t valid = 0;
    for (auto& m : mask) {
      m = rng.uniform() < 0.7;
      valid += m;
    }
    if (valid == 0) {
      mask[rng.below(n)] = 1;
      valid = 1;
    }
    nn::AttentionTrace trace;
    nn::attention_pool(v.data(), n, dim, mask, nn::ConstMatrixView(W.data(), att, dim), b.data(),
                       w.data(), trace);
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      sum += trace.weights[r];
      if (!mask[r] && trace.weights[r] != 0.0) ++masked_nonzero;
      if (equal_rows && mask[r]) {
        worst_uniform = std::max(worst_uniform, std::abs(trace.weights[r] - 1.0 / double(valid)));
      }
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  const std::string detail = "max |sum-1| " + fmt("%.3g", worst_sum) + ", masked nonzero " +
                             std::to_string(masked_nonzero) + ", max uniform dev " +
                             fmt("%.3g", worst_uniform);
  if (worst_sum <= 1e-6 && masked_nonzero == 0 && worst_uniform <= 1e-6) return pass(detail);
  return fail(detail);
}

// ---- 5 ----------------------------------------------------------------------

Outcome overfit_sanity() {
  const auto start = Clock::now();
  const harness::Dataset ds = harness::make_synthetic_dataset(4, 55);
  const harness::Corpus corpus = harness::prepare_corpus(ds);
  harness::RunConfig cfg;
  cfg.dropout = 0.0;
  cfg.epochs = 200;
  cfg.batch = 4;
  cfg.seed = 5;
  std::vector<std::size_t> all(ds.essays.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto vocab = text::Vocabulary::pos_tags();
  const auto stats = features::NormalizationStats::fit(corpus.raw_features);
  const auto train = harness::encode_essays(corpus, all, vocab, stats, cfg);
  const harness::EncodedSet no_dev;
  const auto model = harness::train_network(cfg.model_config(vocab.size()), train, no_dev, cfg);
  double sse = 0.0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double d = nn::predict(model.params, train.tensors[i], train.features[i]) -
                     train.targets[i];
    sse += d * d;
  }
  const double mse = sse / double(train.size());
  const double secs = seconds_since(start);
  const std::string detail = std::to_string(train.size()) + " essays, " +
                             std::to_string(model.epochs.size()) + " epochs, train MSE " +
                             fmt("%.3g", mse) + ", " + fmt("%.1f", secs) + " s";
  if (train.size() == 32 && model.epochs.size() <= 200 && mse < 0.01 && secs < 120.0) {
    return pass(detail);
  }
  return fail(detail);
}

// ---- 6 ----------------------------------------------------------------------

Outcome feature_contract() {
  const auto fixture = testing::read_fixture();
  const harness::Dataset synth = harness::make_synthetic_dataset(6, 66);
  std::vector<features::FeatureVector> raw;
  std::vector<bool> nonempty;
  for (const auto& e : fixture) {
    const auto tagged = text::analyze(e.text);
    raw.push_back(features::assemble(tagged, e.set));
    nonempty.push_back(!tagged.empty());
  }
  for (const auto& e : synth.essays) {
    const auto tagged = text::analyze(e.text);
    raw.push_back(features::assemble(tagged, e.essay_set));
    nonempty.push_back(!tagged.empty());
  }
  const auto& reg = features::FeatureRegistry::reference();
  if (reg.dimension() != 86) return fail("registry dimension " + std::to_string(reg.dimension()));
  const std::size_t tag_begin = reg.offset_of("variation") + 8;
  const std::size_t tag_end = reg.offset_of("sentiment");
  double worst_tag = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].values.size() != 86) return fail("vector with wrong size");
    if (!nonempty[i]) continue;
    const double sum =
        std::accumulate(raw[i].values.begin() + long(tag_begin), raw[i].values.begin() + long(tag_end), 0.0);
    worst_tag = std::max(worst_tag, std::abs(sum - 1.0));
  }
  const auto stats = features::NormalizationStats::fit(raw);
  std::size_t out_of_range = 0;
  for (const auto& fv : raw) {
    for (double v : stats.apply(fv).values) out_of_range += !(v >= 0.0 && v <= 1.0);
  }
  std::vector<features::FeatureVector> fixture_vectors(raw.begin(),
                                                       raw.begin() + long(fixture.size()));
  const auto mismatches = testing::compare_golden(fixture, fixture_vectors);
  const std::string detail = std::to_string(raw.size()) + " essays, tag-sum max dev " +
                             fmt("%.3g", worst_tag) + ", out of [0,1] " +
                             std::to_string(out_of_range) + ", golden mismatches " +
                             std::to_string(mismatches.size());
  if (worst_tag <= 1e-9 && out_of_range == 0 && mismatches.empty() && fixture.size() == 5) {
    return pass(detail);
  }
  return fail(detail);
}

// ---- 7, 8: shared small training setup ----------------------------------------

harness::RunConfig small_run_config() {
  harness::RunConfig cfg;
  cfg.embedding_dim = 8;
  cfg.filters = 10;
  cfg.hidden = 8;
  cfg.epochs = 3;
  cfg.batch = 8;
  cfg.seed = 17;
  cfg.caps = {15, 25};
  return cfg;
}

struct SmallSetup {
  harness::Dataset dataset = harness::make_synthetic_dataset(10, 77);
  harness::Corpus corpus = harness::prepare_corpus(dataset);
};

const SmallSetup& small_setup() {
  static const SmallSetup setup;
  return setup;
}

Outcome round_trip_exactness() {
  int checked = 0;
  for (const auto& meta : metrics::asap_prompts()) {
    for (int s = meta.score_min; s <= meta.score_max; ++s) {
      ++checked;
      if (metrics::rescale_from_unit(metrics::scale_to_unit(s, meta), meta) != s) {
        return fail("set " + std::to_string(meta.essay_set) + " score " + std::to_string(s) +
                    " does not round-trip");
      }
    }
  }
  const auto& setup = small_setup();
  const auto cfg = small_run_config();
  const auto plan = harness::make_fold(setup.dataset, 3, cfg.seed);
  const auto out = harness::train_fold(setup.corpus, plan, cfg);
  const auto path = std::filesystem::temp_directory_path() / "essayscore_acceptance.ckpt";
  nn::save_checkpoint(path.string(), out.checkpoint);
  const nn::Checkpoint back = nn::load_checkpoint(path.string());
  std::filesystem::remove(path);
  const auto eval = harness::evaluate_target(back, setup.corpus, plan, cfg, cfg.subsample);
  bool identical = back == out.checkpoint && eval.qwk == out.result.test_qwk &&
                   eval.predictions.size() == out.result.predictions.size();
  for (std::size_t i = 0; identical && i < eval.predictions.size(); ++i) {
    identical = eval.predictions[i].unit == out.result.predictions[i].unit &&
                eval.predictions[i].predicted == out.result.predictions[i].predicted;
  }
  const std::string detail = std::to_string(checked) + " scores round-trip; reloaded checkpoint " +
                             (identical ? "reproduces" : "does not reproduce") +
                             " evaluation (QWK " + fmt("%.6f", eval.qwk) + ")";
  return identical ? pass(detail) : fail(detail);
}

Outcome determinism() {
  const auto& setup = small_setup();
  const auto cfg = small_run_config();
  const auto plan = harness::make_fold(setup.dataset, 6, cfg.seed);
  const auto a = harness::train_fold(setup.corpus, plan, cfg);
  const auto b = harness::train_fold(setup.corpus, harness::make_fold(setup.dataset, 6, cfg.seed),
                                     cfg);
  const bool same_bytes =
      nn::serialize_checkpoint(a.checkpoint) == nn::serialize_checkpoint(b.checkpoint);
  const bool same_qwk = a.result.test_qwk == b.result.test_qwk;
  const std::string detail = std::string("checkpoints ") + (same_bytes ? "identical" : "differ") +
                             ", QWK " + fmt("%.17g", a.result.test_qwk) + " vs " +
                             fmt("%.17g", b.result.test_qwk);
  return same_bytes && same_qwk ? pass(detail) : fail(detail);
}

// ---- 9, 10: need the public ASAP file ----------------------------------------

const char* asap_path() {
  const char* p = std::getenv("ASAP_TSV");
  return p && *p ? p : nullptr;
}

Outcome dataset_stats() {
  const char* path = asap_path();
  if (!path) return skip("set ASAP_TSV to the training_set_rel3.tsv path");
  const auto ds = harness::load_dataset(path);
  const auto stats = harness::dataset_stats(ds);
  const std::size_t counts[8] = {1783, 1800, 1726, 1772, 1805, 1800, 1569, 723};
  const std::size_t mins[8] = {10, 24, 39, 312, 24, 44, 0, 0};
  const std::size_t maxs[8] = {47, 7, 423, 253, 258, 367, 0, 1};
  std::string detail;
  bool ok = stats.size() == 8;
  for (std::size_t i = 0; ok && i < 8; ++i) {
    const auto& s = stats[i];
    const bool row = s.count == counts[i] && s.min_score_count == mins[i] &&
                     s.max_score_count == maxs[i];
    if (!row) {
      detail += "set " + std::to_string(s.essay_set) + ": " + std::to_string(s.count) + " " +
                std::to_string(s.min_score_count) + "/" + std::to_string(s.max_score_count) + "; ";
    }
    ok = ok && row;
  }
  if (ok) return pass("all eight sets match");
  return fail(detail.empty() ? "wrong number of sets" : detail);
}

Outcome full_reproduction() {
  const char* path = asap_path();
  const char* full = std::getenv("ESSAYSCORE_FULL_RUN");
  if (!path || !full || *full != '1') {
    return skip("set ASAP_TSV and ESSAYSCORE_FULL_RUN=1 (hours of CPU; target >= 0.60, ref 0.686)");
  }
  const auto ds = harness::load_dataset(path);
  const auto corpus = harness::prepare_corpus(ds);
  harness::RunConfig cfg;
  const char* out = std::getenv("ESSAYSCORE_FULL_OUT");
  cfg.out_dir = out && *out ? std::string(out)
                            : (std::filesystem::temp_directory_path() / "essayscore_full").string();
  harness::RunLog log(std::filesystem::path(cfg.out_dir) / "run.log",
                      [](const std::string& line) { std::fprintf(stderr, "%s\n", line.c_str()); });
  const auto report = harness::run_cross_validation(corpus, cfg, {}, {0.25, 0.5, 0.75, 1.0}, &log);
  bool monotone = true;
  for (std::size_t i = 1; i < report.subsample_curve.size(); ++i) {
    monotone = monotone && report.subsample_curve[i].average >=
                               report.subsample_curve[i - 1].average - 0.02;
  }
  const std::string detail = "average QWK " + fmt("%.4f", report.average_qwk) +
                             " (reference 0.686), subsample curve " +
                             (monotone ? "monotone" : "not monotone") + " within 0.02";
  return report.average_qwk >= 0.60 && monotone ? pass(detail) : fail(detail);
}

}  // namespace
}  // namespace essayscore

int main() {
  using namespace essayscore;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"qwk oracle equivalence", qwk_oracle_equivalence},
      {"gradient correctness", gradient_correctness},
      {"forward oracle", forward_oracle},
      {"attention invariants", attention_invariants},
      {"overfit sanity", overfit_sanity},
      {"feature contract", feature_contract},
      {"round-trip exactness", round_trip_exactness},
      {"determinism", determinism},
      {"dataset stats", dataset_stats},
      {"full reproduction", full_reproduction},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.status == Status::kPass ? "PASS" : o.status == Status::kSkip ? "SKIP" : "FAIL";
    failures += o.status == Status::kFail;
    std::printf("%s criterion %zu: %s (%s)\n", tag, i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
