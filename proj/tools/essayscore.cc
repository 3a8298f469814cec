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

// essayscore: cross-prompt essay scoring command line.
//
//   essayscore stats --data training_set_rel3.tsv
//   essayscore features extract --data d.tsv --out feats/
//   essayscore train --data d.tsv --target-prompt 3 --out runs/p3
//   essayscore eval --data d.tsv --checkpoint runs/p3/fold_3.ckpt --subsample 0.2
//   essayscore cv --data d.tsv --out runs/cv --subsample-curve 0.1,0.2,0.3,0.4
//   essayscore qwk --input pairs.csv --range 0,3
//   essayscore pos-tag --data d.tsv --out tagged.txt
//
// Shared flags may come from --config, a flat key=value file; flags given
// on the command line win.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "essayscore/common/checksum.h"
#include "essayscore/common/error.h"
#include "essayscore/common/io.h"
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
#include "essayscore/text/pipeline.h"

namespace fs = std::filesystem;
using namespace essayscore;

namespace {

struct Options {
  harness::RunConfig run;
  std::string data;
  std::size_t synthetic = 0;
  std::string pretagged;
  std::string mode = "pos";
  std::string features = "on";
  int target_prompt = 0;
  std::string checkpoint;
  std::vector<int> targets;
  std::vector<double> curve;
  std::size_t seeds = 1;
  std::string input;
  std::vector<int> range;
  bool quiet = false;
};

void note(const Options& o, const std::string& line) {
  if (!o.quiet) std::fprintf(stderr, "%s\n", line.c_str());
}

harness::RunConfig resolved_config(const Options& o) {
  harness::RunConfig cfg = o.run;
  cfg.set("mode", o.mode);
  cfg.set("features", o.features);
  cfg.validate();
  return cfg;
}

harness::Dataset load_data(const Options& o) {
  if (o.synthetic > 0) {
    if (!o.data.empty()) throw Error("--data and --synthetic are exclusive");
    return harness::make_synthetic_dataset(o.synthetic, o.run.seed);
  }
  if (o.data.empty()) throw Error("--data is required");
  harness::Dataset ds = harness::load_dataset(o.data);
  for (const auto& w : ds.warnings) note(o, "warning: " + w);
  return ds;
}

harness::Corpus load_corpus(const Options& o, const harness::Dataset& ds,
                            std::map<std::string, text::TaggedEssay>& pretagged) {
  const std::map<std::string, text::TaggedEssay>* tags = nullptr;
  if (!o.pretagged.empty()) {
    pretagged = text::parse_pretagged_collection(read_file(o.pretagged));
    tags = &pretagged;
  }
  std::size_t last = 0;
  return harness::prepare_corpus(ds, tags, [&](std::size_t done, std::size_t total) {
    if (o.quiet || (done != total && done - last < 500)) return;
    last = done;
    std::fprintf(stderr, "\rtagging %zu/%zu", done, total);
    if (done == total) std::fprintf(stderr, "\n");
  });
}

harness::RunLog open_log(const Options& o, const harness::RunConfig& cfg) {
  auto sink = [&o](const std::string& line) { note(o, line); };
  if (cfg.out_dir.empty()) return harness::RunLog({}, sink);
  return harness::RunLog(fs::path(cfg.out_dir) / "run.log", sink);
}

int cmd_stats(const Options& o) {
  const auto ds = load_data(o);
  std::printf("%-4s %7s %9s %10s %9s %9s\n", "set", "essays", "range", "mean_len", "min_cnt",
              "max_cnt");
  for (const auto& s : harness::dataset_stats(ds)) {
    const auto& meta = metrics::prompt_meta(s.essay_set);
    const std::string range = std::to_string(meta.score_min) + "-" + std::to_string(meta.score_max);
    std::printf("%-4d %7zu %9s %10.1f %9zu %9zu\n", s.essay_set, s.count, range.c_str(),
                s.mean_length, s.min_score_count, s.max_score_count);
  }
  std::printf("fnv1a64 %s\n", to_hex(ds.checksum).c_str());
  return 0;
}

std::string feature_csv(const harness::Dataset& ds,
                        const std::vector<features::FeatureVector>& vectors) {
  std::string out = "essay_id,essay_set";
  for (const auto& n : features::FeatureRegistry::reference().names()) out += "," + n;
  out += "\n";
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out += ds.essays[i].essay_id + "," + std::to_string(ds.essays[i].essay_set);
    for (double v : vectors[i].values) out += "," + harness::format_double(v);
    out += "\n";
  }
  return out;
}

int cmd_features_extract(const Options& o) {
  const auto ds = load_data(o);
  std::map<std::string, text::TaggedEssay> pretagged;
  const auto corpus = load_corpus(o, ds, pretagged);
  const auto stats = features::NormalizationStats::fit(corpus.raw_features);
  std::vector<features::FeatureVector> normalized;
  for (const auto& fv : corpus.raw_features) normalized.push_back(stats.apply(fv));
  const fs::path out = o.run.out_dir.empty() ? fs::path(".") : fs::path(o.run.out_dir);
  write_file(out / "features_raw.csv", feature_csv(ds, corpus.raw_features));
  write_file(out / "features_normalized.csv", feature_csv(ds, normalized));
  std::printf("wrote %s and %s (%zu essays)\n", (out / "features_raw.csv").string().c_str(),
              (out / "features_normalized.csv").string().c_str(), ds.essays.size());
  return 0;
}

int cmd_train(const Options& o) {
  const auto cfg = resolved_config(o);
  const auto ds = load_data(o);
  std::map<std::string, text::TaggedEssay> pretagged;
  const auto corpus = load_corpus(o, ds, pretagged);
  auto log = open_log(o, cfg);
  const auto report = harness::run_cross_validation(corpus, cfg, {o.target_prompt}, {}, &log);
  const auto& r = report.folds.front();
  std::printf("prompt %d: test QWK %.4f (epoch %d, %.1f s)\n", r.target_prompt, r.test_qwk,
              r.selected_epoch, r.seconds);
  return 0;
}

int cmd_eval(const Options& o) {
  if (o.checkpoint.empty()) throw Error("--checkpoint is required");
  const nn::Checkpoint ckpt = nn::load_checkpoint(o.checkpoint);
  // The checkpoint's own settings fix the encoding; only the subsample
  // fraction and output come from this invocation.
  harness::RunConfig cfg;
  int target = o.target_prompt;
  for (const auto& [k, v] : ckpt.metadata) {
    if (k == "target-prompt") {
      if (target == 0) target = std::stoi(v);
    } else {
      cfg.set(k, v);
    }
  }
  if (target == 0) throw Error("checkpoint names no target prompt; pass --target-prompt");
  cfg.subsample = o.run.subsample;
  cfg.out_dir = o.run.out_dir;
  cfg.validate();
  const auto ds = load_data(o);
  std::map<std::string, text::TaggedEssay> pretagged;
  const auto corpus = load_corpus(o, ds, pretagged);
  const auto plan = harness::make_fold(ds, target, cfg.seed, cfg.dev_fraction);
  const auto eval = harness::evaluate_target(ckpt, corpus, plan, cfg, cfg.subsample);
  if (!cfg.out_dir.empty()) {
    write_file(fs::path(cfg.out_dir) / ("predictions_" + std::to_string(target) + ".csv"),
               harness::format_predictions_csv(eval.predictions));
  }
  std::printf("prompt %d: test QWK %.4f (%zu essays, %zu visible for normalization)\n", target,
              eval.qwk, eval.predictions.size(), eval.visible);
  return 0;
}

int cmd_cv(const Options& o) {
  const auto base = resolved_config(o);
  const auto ds = load_data(o);
  std::map<std::string, text::TaggedEssay> pretagged;
  const auto corpus = load_corpus(o, ds, pretagged);
  std::vector<double> averages;
  for (std::size_t rep = 0; rep < o.seeds; ++rep) {
    harness::RunConfig cfg = base;
    cfg.seed = base.seed + rep;
    if (o.seeds > 1 && !base.out_dir.empty()) {
      cfg.out_dir = (fs::path(base.out_dir) / ("seed_" + std::to_string(cfg.seed))).string();
    }
    auto log = open_log(o, cfg);
    const auto report = harness::run_cross_validation(corpus, cfg, o.targets, o.curve, &log);
    if (o.seeds > 1) std::printf("seed %llu\n", static_cast<unsigned long long>(cfg.seed));
    std::printf("%s", harness::format_results_table(report).c_str());
    averages.push_back(report.average_qwk);
  }
  if (averages.size() > 1) {
    double sum = 0.0;
    for (double a : averages) sum += a;
    std::printf("mean over %zu seeds: %.4f\n", averages.size(), sum / double(averages.size()));
  }
  return 0;
}

int cmd_qwk(const Options& o) {
  if (o.range.size() != 2 || o.range[0] >= o.range[1]) throw Error("--range needs MIN,MAX");
  const std::string contents = o.input == "-" || o.input.empty()
                                   ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                   : read_file(o.input);
  std::vector<int> human, pred;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(contents)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() != 2) throw DataError("line " + std::to_string(line_no) + ": expected 2 columns");
    try {
      const int h = std::stoi(std::string(trim(cols[0])));
      const int p = std::stoi(std::string(trim(cols[1])));
      human.push_back(h - o.range[0]);
      pred.push_back(p - o.range[0]);
    } catch (const std::logic_error&) {
      if (line_no == 1) continue;  // header
      throw DataError("line " + std::to_string(line_no) + ": not an integer pair");
    }
  }
  const auto q = metrics::qwk_detail(human, pred, o.range[1] - o.range[0] + 1);
  std::printf("%.4f\n", q.kappa);
  return 0;
}

int cmd_pos_tag(const Options& o) {
  std::string out;
  if (o.data.empty() && o.synthetic == 0) {
    const std::string text(std::istreambuf_iterator<char>(std::cin), {});
    out = text::format_pretagged(text::analyze(text));
  } else {
    const auto ds = load_data(o);
    std::size_t done = 0;
    for (const auto& e : ds.essays) {
      out += "#essay_id=" + e.essay_id + "\n";
      out += text::format_pretagged(text::analyze(e.text));
      if (!o.quiet && ++done % 500 == 0) std::fprintf(stderr, "\rtagging %zu", done);
    }
    if (!o.quiet && done >= 500) std::fprintf(stderr, "\n");
  }
  if (o.run.out_dir.empty()) {
    std::fwrite(out.data(), 1, out.size(), stdout);
  } else {
    write_file(o.run.out_dir, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-prompt automated essay scoring"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file with flag defaults");
  Options o;
  auto& r = o.run;
  app.add_option("--data", o.data, "ASAP-format TSV");
  app.add_option("--synthetic", o.synthetic, "Use a generated dataset with N essays per set");
  app.add_option("--pretagged", o.pretagged, "Tokens and tags from pos-tag, keyed by essay id");
  app.add_option("--mode", o.mode, "Sequence input: pos, word or none")
      ->check(CLI::IsMember({"pos", "word", "none"}));
  app.add_option("--features", o.features, "Hand-crafted features")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--seed", r.seed);
  app.add_option("--epochs", r.epochs);
  app.add_option("--batch", r.batch);
  app.add_option("--subsample", r.subsample,
                 "Fraction of target-prompt essays visible for normalization");
  app.add_option("--out", r.out_dir, "Output directory (file for pos-tag)");
  app.add_option("--max-sentences", r.caps.max_sentences);
  app.add_option("--max-tokens", r.caps.max_tokens);
  app.add_option("--embedding-dim", r.embedding_dim);
  app.add_option("--filters", r.filters);
  app.add_option("--window", r.window);
  app.add_option("--hidden", r.hidden);
  app.add_option("--dropout", r.dropout);
  app.add_option("--clip", r.clip, "Global gradient-norm clip, 0 for none");
  app.add_option("--learning-rate", r.learning_rate);
  app.add_option("--dev-fraction", r.dev_fraction);
  app.add_option("--word-min-count", r.word_min_count);
  app.add_flag("-q,--quiet", o.quiet, "No progress on stderr");

  auto* stats = app.add_subcommand("stats", "Per-set essay counts and score extremes");
  auto* features = app.add_subcommand("features", "Feature extraction");
  features->require_subcommand(1);
  auto* extract = features->add_subcommand("extract", "Write raw and normalized feature CSVs");
  auto* train = app.add_subcommand("train", "Train and test one cross-prompt fold");
  train->add_option("--target-prompt", o.target_prompt)->required()->check(CLI::Range(1, 8));
  auto* eval = app.add_subcommand("eval", "Evaluate a fold checkpoint on its target prompt");
  eval->add_option("--checkpoint", o.checkpoint)->required();
  eval->add_option("--target-prompt", o.target_prompt)->check(CLI::Range(1, 8));
  auto* cv = app.add_subcommand("cv", "Prompt-wise cross-validation");
  cv->add_option("--targets", o.targets, "Subset of target prompts")
      ->delimiter(',')
      ->check(CLI::Range(1, 8));
  cv->add_option("--subsample-curve", o.curve, "Fractions to evaluate each fold at")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  cv->add_option("--seeds", o.seeds, "Repeat with consecutive seeds and report the mean")
      ->check(CLI::PositiveNumber);
  auto* qwk = app.add_subcommand("qwk", "Kappa of a human,predicted CSV");
  qwk->add_option("--input", o.input, "CSV path, - for stdin");
  qwk->add_option("--range", o.range, "MIN,MAX score")->delimiter(',')->expected(2)->required();
  auto* pos_tag = app.add_subcommand("pos-tag", "Tag --data essays, or stdin text");
  for (auto* sub : {stats, features, extract, train, eval, cv, qwk, pos_tag}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*stats) return cmd_stats(o);
    if (*extract) return cmd_features_extract(o);
    if (*train) return cmd_train(o);
    if (*eval) return cmd_eval(o);
    if (*cv) return cmd_cv(o);
    if (*qwk) return cmd_qwk(o);
    if (*pos_tag) return cmd_pos_tag(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
