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

#include "essayscore/harness/trainer.h"

#include <chrono>
#include <cmath>
#include <map>
#include <span>

#include "essayscore/common/error.h"
#include "essayscore/common/random.h"
#include "essayscore/features/registry.h"
#include "essayscore/metrics/prompt.h"
#include "essayscore/metrics/qwk.h"
#include "essayscore/nn/optimizer.h"
#include "essayscore/text/pipeline.h"

namespace essayscore::harness {
namespace {

std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
  return Rng::splitmix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

features::NormalizationStats fit_stats(const Corpus& corpus,
                                       std::initializer_list<const std::vector<std::size_t>*> lists) {
  std::vector<features::FeatureVector> raw;
  for (const auto* list : lists) {
    for (std::size_t i : *list) raw.push_back(corpus.raw_features[i]);
  }
  return features::NormalizationStats::fit(raw);
}

text::Vocabulary fold_vocabulary(const Corpus& corpus, const FoldPlan& plan,
                                 const RunConfig& config) {
  switch (config.mode) {
    case text::EmbeddingMode::kPos:
      return text::Vocabulary::pos_tags();
    case text::EmbeddingMode::kWord: {
      std::vector<const text::TaggedEssay*> essays;
      for (std::size_t i : plan.train) essays.push_back(&corpus.tagged[i]);
      return text::Vocabulary::words(essays, config.word_min_count);
    }
    case text::EmbeddingMode::kNone:
      break;
  }
  return text::Vocabulary::from_entries(text::EmbeddingMode::kNone,
                                        text::Vocabulary::pos_tags().entries());
}

}  // namespace

Corpus prepare_corpus(const Dataset& dataset,
                      const std::map<std::string, text::TaggedEssay>* pretagged,
                      const std::function<void(std::size_t, std::size_t)>& progress) {
  Corpus corpus;
  corpus.dataset = &dataset;
  const std::size_t n = dataset.essays.size();
  corpus.tagged.reserve(n);
  corpus.raw_features.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Essay& e = dataset.essays[i];
    if (pretagged != nullptr) {
      auto it = pretagged->find(e.essay_id);
      if (it == pretagged->end()) throw DataError("no pre-tagged text for essay " + e.essay_id);
      corpus.tagged.push_back(it->second);
    } else {
      corpus.tagged.push_back(text::analyze(e.text));
    }
    corpus.raw_features.push_back(features::assemble(corpus.tagged.back(), e.essay_set));
    if (progress && ((i + 1) % 500 == 0 || i + 1 == n)) progress(i + 1, n);
  }
  return corpus;
}

std::vector<nn::Example> EncodedSet::examples() const {
  std::vector<nn::Example> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back({&tensors[i], features[i], targets[i]});
  return out;
}

EncodedSet encode_essays(const Corpus& corpus, const std::vector<std::size_t>& indices,
                         const text::Vocabulary& vocab, const features::NormalizationStats& stats,
                         const RunConfig& config) {
  EncodedSet out;
  for (std::size_t i : indices) {
    const Essay& e = corpus.dataset->essays[i];
    out.tensors.push_back(text::encode_indices(corpus.tagged[i], vocab, config.caps));
    if (config.use_features) {
      const auto norm = stats.apply(corpus.raw_features[i]);
      out.features.emplace_back(norm.values.begin(), norm.values.end());
    } else {
      out.features.emplace_back();
    }
    out.targets.push_back(metrics::scale_to_unit(e.score, metrics::prompt_meta(e.essay_set)));
    out.sets.push_back(e.essay_set);
    out.gold.push_back(e.score);
    out.ids.push_back(e.essay_id);
  }
  return out;
}

TrainedModel train_network(const nn::ModelConfig& model, const EncodedSet& train,
                           const EncodedSet& dev, const RunConfig& config,
                           const EpochCallback& on_epoch) {
  if (train.size() == 0) throw DataError("no training essays");
  TrainedModel out;
  nn::Params params = nn::init_params(model, derive(config.seed, 0));
  nn::Params grads(model);
  nn::RmsProp optimizer(params, {config.learning_rate, 0.9, 1e-7});
  Rng order_rng(derive(config.seed, 1));
  Rng dropout_rng(derive(config.seed, 2));
  const bool dropout_on = model.dropout > 0.0;
  const std::vector<nn::Example> all = train.examples();
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<nn::Example> batch;
  double best = -INFINITY;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    order_rng.shuffle(std::span<std::size_t>(order));
    double loss_sum = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch) {
      const std::size_t end = std::min(order.size(), start + config.batch);
      batch.clear();
      for (std::size_t k = start; k < end; ++k) {
        batch.push_back(all[order[k]]);
        ++out.examples_per_prompt[train.sets[order[k]]];
      }
      const double loss = nn::batch_gradients(params, batch, dropout_on, &dropout_rng, grads);
      if (!std::isfinite(loss)) {
        throw NumericError("non-finite training loss at epoch " + std::to_string(epoch) +
                           ", batch " + std::to_string(batches + 1) + " (first essay " +
                           train.ids[order[start]] + ")");
      }
      nn::clip_gradients(grads, config.clip);
      optimizer.step(params, grads);
      loss_sum += loss;
      ++batches;
    }
    EpochRecord rec;
    rec.epoch = static_cast<int>(epoch);
    rec.train_loss = loss_sum / static_cast<double>(batches);
    if (dev.size() > 0) {
      rec.dev_qwk = mean_prompt_qwk(predict_set(params, dev));
      if (rec.dev_qwk > best) {
        best = rec.dev_qwk;
        out.params = params;
        out.selected_epoch = rec.epoch;
      }
    }
    out.epochs.push_back(rec);
    if (on_epoch) on_epoch(rec);
  }
  if (dev.size() == 0) {
    out.params = std::move(params);
    out.selected_epoch = static_cast<int>(config.epochs);
  }
  return out;
}

std::vector<Prediction> predict_set(const nn::Params& params, const EncodedSet& set) {
  std::vector<Prediction> out;
  out.reserve(set.size());
  nn::ForwardTrace trace;
  for (std::size_t i = 0; i < set.size(); ++i) {
    Prediction p;
    p.essay_id = set.ids[i];
    p.essay_set = set.sets[i];
    p.gold = set.gold[i];
    p.unit = nn::forward(params, set.tensors[i], set.features[i], false, nullptr, trace);
    p.predicted = metrics::rescale_from_unit(p.unit, metrics::prompt_meta(p.essay_set));
    out.push_back(std::move(p));
  }
  return out;
}

double mean_prompt_qwk(const std::vector<Prediction>& predictions) {
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_set;
  for (const auto& p : predictions) {
    by_set[p.essay_set].first.push_back(p.gold);
    by_set[p.essay_set].second.push_back(p.predicted);
  }
  if (by_set.empty()) throw Error("no predictions to score");
  double total = 0.0;
  for (const auto& [set, hp] : by_set) {
    total += metrics::qwk(hp.first, hp.second, metrics::prompt_meta(set));
  }
  return total / static_cast<double>(by_set.size());
}

FoldOutcome train_fold(const Corpus& corpus, const FoldPlan& plan, const RunConfig& config,
                       const EpochCallback& on_epoch) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  RunConfig fold_config = config;
  fold_config.seed = derive(config.seed, 100 + static_cast<std::uint64_t>(plan.target_prompt));

  const text::Vocabulary vocab = fold_vocabulary(corpus, plan, config);
  const auto train_stats = fit_stats(corpus, {&plan.train, &plan.dev});
  const EncodedSet train = encode_essays(corpus, plan.train, vocab, train_stats, config);
  const EncodedSet dev = encode_essays(corpus, plan.dev, vocab, train_stats, config);
  TrainedModel trained =
      train_network(config.model_config(vocab.size()), train, dev, fold_config, on_epoch);

  const auto visible = visible_target_essays(plan, config.subsample, config.seed);
  FoldOutcome out;
  out.checkpoint.params = std::move(trained.params);
  out.checkpoint.vocabulary = vocab;
  out.checkpoint.registry_fingerprint = features::FeatureRegistry::reference().fingerprint();
  out.checkpoint.normalization = train_stats;
  out.checkpoint.normalization.merge(fit_stats(corpus, {&visible}));
  out.checkpoint.metadata = config.key_values();
  out.checkpoint.metadata.emplace_back("target-prompt", std::to_string(plan.target_prompt));
  out.checkpoint.metadata.emplace_back("selected-epoch", std::to_string(trained.selected_epoch));

  TargetEvaluation eval = evaluate_target(out.checkpoint, corpus, plan, config, config.subsample);
  FoldResult& r = out.result;
  r.target_prompt = plan.target_prompt;
  r.epochs = std::move(trained.epochs);
  r.selected_epoch = trained.selected_epoch;
  r.examples_per_prompt = std::move(trained.examples_per_prompt);
  r.test_qwk = eval.qwk;
  r.visible_target_essays = eval.visible;
  r.predictions = std::move(eval.predictions);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

TargetEvaluation evaluate_target(const nn::Checkpoint& checkpoint, const Corpus& corpus,
                                 const FoldPlan& plan, const RunConfig& config, double fraction) {
  if (checkpoint.registry_fingerprint != features::FeatureRegistry::reference().fingerprint()) {
    throw DataError("checkpoint was trained with a different feature registry");
  }
  TargetEvaluation out;
  const auto visible = visible_target_essays(plan, fraction, config.seed);
  out.visible = visible.size();
  const auto target_stats = fit_stats(corpus, {&visible});
  RunConfig eval_config = config;
  eval_config.use_features = checkpoint.params.config().feature_dim > 0;
  const EncodedSet test =
      encode_essays(corpus, plan.test, checkpoint.vocabulary, target_stats, eval_config);
  out.predictions = predict_set(checkpoint.params, test);
  std::vector<int> gold, pred;
  for (const auto& p : out.predictions) {
    gold.push_back(p.gold);
    pred.push_back(p.predicted);
  }
  out.qwk = metrics::qwk(gold, pred, metrics::prompt_meta(plan.target_prompt));
  return out;
}

}  // namespace essayscore::harness
