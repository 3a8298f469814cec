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

#ifndef ESSAYSCORE_HARNESS_REPORT_H_
#define ESSAYSCORE_HARNESS_REPORT_H_

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "essayscore/harness/config.h"
#include "essayscore/harness/trainer.h"

namespace essayscore::harness {

// Appends timestamp-free lines to <out>/run.log and mirrors them to a sink.
class RunLog {
 public:
  RunLog() = default;
  // An empty path only forwards lines to the sink.
  RunLog(const std::filesystem::path& path, std::function<void(const std::string&)> sink = {});
  void line(const std::string& text);

 private:
  std::ofstream file_;
  std::function<void(const std::string&)> sink_;
};

struct SubsamplePoint {
  double fraction = 0.0;
  std::vector<double> qwk;  // per fold, in fold order
  double average = 0.0;
};

struct CrossValidationReport {
  std::vector<FoldResult> folds;
  double average_qwk = 0.0;
  std::vector<SubsamplePoint> subsample_curve;
};

// Trains one fold per target prompt (1..8 unless `targets` narrows it).
// With config.out_dir set, writes results.csv, predictions_<p>.csv,
// fold_<p>.ckpt, subsample.csv (when fractions are given) and run.log.
CrossValidationReport run_cross_validation(const Corpus& corpus, const RunConfig& config,
                                           const std::vector<int>& targets = {},
                                           const std::vector<double>& subsample_fractions = {},
                                           RunLog* log = nullptr);

struct ResultRow {
  std::string prompt;  // "1".."8" or "average"
  double qwk = 0.0;
  int epoch = 0;
  double seconds = 0.0;
};

std::string format_results_csv(const CrossValidationReport& report);
std::vector<ResultRow> parse_results_csv(std::string_view csv);
std::string format_results_table(const CrossValidationReport& report);
std::string format_predictions_csv(const std::vector<Prediction>& predictions);

// Shortest text that parses back to the same double.
std::string format_double(double v);

}  // namespace essayscore::harness

#endif  // ESSAYSCORE_HARNESS_REPORT_H_
