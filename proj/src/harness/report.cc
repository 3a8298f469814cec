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

#include "essayscore/harness/report.h"

#include <charconv>
#include <cstdio>

#include "essayscore/common/checksum.h"
#include "essayscore/common/error.h"
#include "essayscore/common/io.h"
#include "essayscore/features/registry.h"

namespace essayscore::harness {

RunLog::RunLog(const std::filesystem::path& path, std::function<void(const std::string&)> sink)
    : sink_(std::move(sink)) {
  if (path.empty()) return;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  file_.open(path, std::ios::app);
  if (!file_) throw Error("cannot open log file " + path.string());
}

void RunLog::line(const std::string& text) {
  if (file_.is_open()) {
    file_ << text << '\n';
    file_.flush();
  }
  if (sink_) sink_(text);
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

CrossValidationReport run_cross_validation(const Corpus& corpus, const RunConfig& config,
                                           const std::vector<int>& targets,
                                           const std::vector<double>& subsample_fractions,
                                           RunLog* log) {
  config.validate();
  auto say = [log](const std::string& s) {
    if (log) log->line(s);
  };
  for (const auto& [k, v] : config.key_values()) say("config " + k + "=" + v);
  say("dataset fnv1a64 " + to_hex(corpus.dataset->checksum) + " essays " +
      std::to_string(corpus.dataset->essays.size()));
  say("feature registry " + to_hex(features::FeatureRegistry::reference().fingerprint()));

  std::vector<int> folds = targets;
  if (folds.empty()) folds = {1, 2, 3, 4, 5, 6, 7, 8};
  const std::filesystem::path out = config.out_dir;
  CrossValidationReport report;
  std::vector<SubsamplePoint> curve(subsample_fractions.size());
  for (std::size_t i = 0; i < curve.size(); ++i) curve[i].fraction = subsample_fractions[i];

  for (int target : folds) {
    const FoldPlan plan = make_fold(*corpus.dataset, target, config.seed, config.dev_fraction);
    say("fold " + std::to_string(target) + ": train " + std::to_string(plan.train.size()) +
        " dev " + std::to_string(plan.dev.size()) + " test " + std::to_string(plan.test.size()));
    FoldOutcome fold = train_fold(corpus, plan, config, [&](const EpochRecord& e) {
      say("fold " + std::to_string(target) + " epoch " + std::to_string(e.epoch) + " loss " +
          format_double(e.train_loss) + " dev_qwk " + format_double(e.dev_qwk));
    });
    const FoldResult& r = fold.result;
    if (r.examples_per_prompt.count(target) != 0) {
      throw Error("target prompt essays reached training in fold " + std::to_string(target));
    }
    say("fold " + std::to_string(target) + " selected epoch " + std::to_string(r.selected_epoch) +
        " test_qwk " + format_double(r.test_qwk) + " seconds " + format_double(r.seconds));
    for (auto& point : curve) {
      const auto eval = evaluate_target(fold.checkpoint, corpus, plan, config, point.fraction);
      point.qwk.push_back(eval.qwk);
      say("fold " + std::to_string(target) + " subsample " + format_double(point.fraction) +
          " visible " + std::to_string(eval.visible) + " test_qwk " + format_double(eval.qwk));
    }
    if (!config.out_dir.empty()) {
      write_file(out / ("predictions_" + std::to_string(target) + ".csv"),
                 format_predictions_csv(r.predictions));
      nn::save_checkpoint((out / ("fold_" + std::to_string(target) + ".ckpt")).string(),
                          fold.checkpoint);
    }
    report.folds.push_back(r);
  }
  double total = 0.0;
  for (const auto& r : report.folds) total += r.test_qwk;
  report.average_qwk = total / static_cast<double>(report.folds.size());
  for (auto& point : curve) {
    double s = 0.0;
    for (double q : point.qwk) s += q;
    point.average = s / static_cast<double>(point.qwk.size());
  }
  report.subsample_curve = std::move(curve);
  say("average test_qwk " + format_double(report.average_qwk));
  if (!config.out_dir.empty()) {
    write_file(out / "results.csv", format_results_csv(report));
    if (!report.subsample_curve.empty()) {
      std::string csv = "fraction,average_qwk";
      for (const auto& r : report.folds) csv += ",prompt_" + std::to_string(r.target_prompt);
      csv += "\n";
      for (const auto& p : report.subsample_curve) {
        csv += format_double(p.fraction) + "," + format_double(p.average);
        for (double q : p.qwk) csv += "," + format_double(q);
        csv += "\n";
      }
      write_file(out / "subsample.csv", csv);
    }
  }
  return report;
}

std::string format_results_csv(const CrossValidationReport& report) {
  std::string csv = "prompt,qwk,epoch,seconds\n";
  double seconds = 0.0;
  for (const auto& r : report.folds) {
    csv += std::to_string(r.target_prompt) + "," + format_double(r.test_qwk) + "," +
           std::to_string(r.selected_epoch) + "," + format_double(r.seconds) + "\n";
    seconds += r.seconds;
  }
  csv += "average," + format_double(report.average_qwk) + ",," + format_double(seconds) + "\n";
  return csv;
}

std::vector<ResultRow> parse_results_csv(std::string_view csv) {
  std::vector<ResultRow> rows;
  const auto lines = split_lines(csv);
  if (lines.empty() || lines[0] != "prompt,qwk,epoch,seconds") {
    throw DataError("results.csv: unexpected header");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cols = split(lines[i], ',');
    if (cols.size() != 4) throw DataError("results.csv line " + std::to_string(i + 1) + ": expected 4 fields");
    ResultRow r;
    r.prompt = std::string(cols[0]);
    auto num = [&](std::string_view s, auto& out) {
      if (s.empty()) return;
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc() || p != s.data() + s.size()) {
        throw DataError("results.csv line " + std::to_string(i + 1) + ": bad number '" + std::string(s) + "'");
      }
    };
    num(cols[1], r.qwk);
    num(cols[2], r.epoch);
    num(cols[3], r.seconds);
    rows.push_back(r);
  }
  return rows;
}

std::string format_results_table(const CrossValidationReport& report) {
  std::string header = "Prompt ", values = "QWK    ";
  char buf[64];
  for (const auto& r : report.folds) {
    std::snprintf(buf, sizeof buf, "%8d", r.target_prompt);
    header += buf;
    std::snprintf(buf, sizeof buf, "%8.3f", r.test_qwk);
    values += buf;
  }
  std::snprintf(buf, sizeof buf, "%8s", "Avg");
  header += buf;
  std::snprintf(buf, sizeof buf, "%8.3f", report.average_qwk);
  values += buf;
  std::string out = header + "\n" + values + "\n";
  if (!report.subsample_curve.empty()) {
    out += "\nVisible target essays   Avg QWK\n";
    for (const auto& p : report.subsample_curve) {
      std::snprintf(buf, sizeof buf, "%20.0f%%   %7.3f\n", p.fraction * 100.0, p.average);
      out += buf;
    }
  }
  return out;
}

std::string format_predictions_csv(const std::vector<Prediction>& predictions) {
  std::string csv = "essay_id,gold,predicted\n";
  for (const auto& p : predictions) {
    csv += p.essay_id + "," + std::to_string(p.gold) + "," + std::to_string(p.predicted) + "\n";
  }
  return csv;
}

}  // namespace essayscore::harness
