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

#ifndef ESSAYSCORE_HARNESS_TRAINER_H_
#define ESSAYSCORE_HARNESS_TRAINER_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "essayscore/features/feature_vector.h"
#include "essayscore/harness/config.h"
#include "essayscore/harness/dataset.h"
#include "essayscore/harness/folds.h"
#include "essayscore/nn/checkpoint.h"
#include "essayscore/nn/model.h"
#include "essayscore/text/token.h"

namespace essayscore::harness {

// Tagged text and raw features for every essay of a dataset, computed once
// and shared by all folds.
struct Corpus {
  const Dataset* dataset = nullptr;
  std::vector<text::TaggedEssay> tagged;
  std::vector<features::FeatureVector> raw_features;
};

// Tags with the bundled tagger unless `pretagged` (keyed by essay_id) is
// given, in which case every essay must be present there.
Corpus prepare_corpus(const Dataset& dataset,
                      const std::map<std::string, text::TaggedEssay>* pretagged = nullptr,
                      const std::function<void(std::size_t done, std::size_t total)>& progress = {});

// Network inputs for a list of essays.
struct EncodedSet {
  std::vector<text::EssayTensor> tensors;
  std::vector<std::vector<double>> features;
  std::vector<double> targets;  // unit-scaled gold
  std::vector<int> sets;
  std::vector<int> gold;
  std::vector<std::string> ids;

  std::size_t size() const { return tensors.size(); }
  std::vector<nn::Example> examples() const;
};

EncodedSet encode_essays(const Corpus& corpus, const std::vector<std::size_t>& indices,
                         const text::Vocabulary& vocab, const features::NormalizationStats& stats,
                         const RunConfig& config);

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;  // mean batch loss over the epoch
  double dev_qwk = 0.0;
};

struct TrainedModel {
  nn::Params params;  // best-dev parameters (last epoch when dev is empty)
  std::vector<EpochRecord> epochs;
  int selected_epoch = 0;
  // Instrumentation: examples that entered a gradient, per essay set.
  std::map<int, std::size_t> examples_per_prompt;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

// Mini-batch RMSprop on MSE. Batches follow a seeded shuffle per epoch;
// dropout draws come from a separate seeded stream.
TrainedModel train_network(const nn::ModelConfig& model, const EncodedSet& train,
                           const EncodedSet& dev, const RunConfig& config,
                           const EpochCallback& on_epoch = {});

struct Prediction {
  std::string essay_id;
  int essay_set = 0;
  int gold = 0;
  int predicted = 0;
  double unit = 0.0;
};

std::vector<Prediction> predict_set(const nn::Params& params, const EncodedSet& set);

// QWK per essay set of the predictions, then the unweighted mean.
double mean_prompt_qwk(const std::vector<Prediction>& predictions);

struct FoldResult {
  int target_prompt = 0;
  std::vector<EpochRecord> epochs;
  int selected_epoch = 0;
  double test_qwk = 0.0;
  double seconds = 0.0;
  std::map<int, std::size_t> examples_per_prompt;
  std::size_t visible_target_essays = 0;
  std::vector<Prediction> predictions;
};

struct FoldOutcome {
  FoldResult result;
  nn::Checkpoint checkpoint;
};

// Trains on plan.train, selects by dev QWK, and scores plan.test once with
// target features normalized from the visible target essays only.
FoldOutcome train_fold(const Corpus& corpus, const FoldPlan& plan, const RunConfig& config,
                       const EpochCallback& on_epoch = {});

struct TargetEvaluation {
  double qwk = 0.0;
  std::size_t visible = 0;
  std::vector<Prediction> predictions;
};

// Scores plan.test with a checkpoint. Target-set normalization is fitted on
// the visible fraction of the target essays.
TargetEvaluation evaluate_target(const nn::Checkpoint& checkpoint, const Corpus& corpus,
                                 const FoldPlan& plan, const RunConfig& config, double fraction);

}  // namespace essayscore::harness

#endif  // ESSAYSCORE_HARNESS_TRAINER_H_
