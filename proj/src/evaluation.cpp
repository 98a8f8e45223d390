// Copyright 2026 The kurev Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kurev/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "kurev/error.hpp"

namespace kurev {
namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SetupError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw SetupError("cannot write " + path.string());
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::optional<bool> reasonableness(const PullRequest& pr, const std::string& top1,
                                   const std::vector<CommitRecord>& commits,
                                   const std::vector<PullRequest>& prs) {
  if (std::find(pr.reviewers.begin(), pr.reviewers.end(), top1) != pr.reviewers.end()) {
    return std::nullopt;
  }
  const Timestamp from = pr.opened_at.plus_days(-kReasonableWindowDays);
  const auto in_window = [&](Timestamp t) { return t >= from && t < pr.opened_at; };
  std::set<std::string> touched;
  for (const auto& c : commits) {
    if (c.author == top1 && in_window(c.authored_at)) {
      touched.insert(c.changed_files.begin(), c.changed_files.end());
    }
  }
  for (const auto& p : prs) {
    if (p.id != pr.id && p.author == top1 && in_window(p.opened_at)) {
      touched.insert(p.changed_files.begin(), p.changed_files.end());
    }
  }
  const std::set<std::string> changed(pr.changed_files.begin(), pr.changed_files.end());
  std::size_t covered = 0;
  for (const auto& f : changed) covered += touched.count(f);
  return 2 * covered >= changed.size();
}

double ReasonableStats::percent() const {
  return mismatches == 0 ? 0.0
                         : 100.0 * static_cast<double>(reasonable) /
                               static_cast<double>(mismatches);
}

EvalReport evaluate(const std::string& project, const KuStore& store,
                    const std::vector<PullRequest>& history, std::vector<PullRequest> test,
                    const EvalOptions& options) {
  if (test.empty()) throw DataError("no test PRs to evaluate");
  std::stable_sort(test.begin(), test.end(), [](const auto& a, const auto& b) {
    return a.opened_at != b.opened_at ? a.opened_at < b.opened_at : a.id < b.id;
  });

  EvalReport report;
  report.project = project;
  report.pr_count = test.size();

  BaseRecommenders base(store, history, options.recommender);
  std::vector<CombinerReplay> replays;
  for (auto v : kBrstVariants) replays.emplace_back(v, options.seed);

  std::map<RecommenderKind, PrScore> sums;
  const auto record = [&](const PullRequest& pr, const Recommendation& rec,
                          std::optional<RecommenderKind> delegate) {
    const ReviewerSet truth(pr.reviewers.begin(), pr.reviewers.end());
    PrOutcome o;
    o.pr_id = pr.id;
    o.kind = rec.kind;
    o.top = rec.top(kMaxK);
    o.score = score_ranking(o.top, truth);
    o.delegate = delegate;
    if (!o.top.empty()) o.reasonable = reasonableness(pr, o.top.front(), store.commits(), history);
    auto& s = sums[rec.kind];
    for (int k = 0; k < kMaxK; ++k) {
      s.accuracy[k] += o.score.accuracy[k];
      s.precision[k] += o.score.precision[k];
    }
    auto& r = report.reasonableness[rec.kind];
    if (o.reasonable) {
      ++r.mismatches;
      r.reasonable += *o.reasonable;
    }
    report.per_pr.push_back(std::move(o));
  };

  for (const auto& pr : test) {
    const BaseResults results = run_base_recommenders(base, pr);
    for (const auto& [kind, rec] : results.recs) record(pr, rec, std::nullopt);
    for (auto& replay : replays) {
      const CombinedStep step = replay.step(pr, results);
      record(pr, step.recommendation, step.used);
    }
  }

  const double n = static_cast<double>(test.size());
  for (auto kind : kReportKinds) {
    auto& acc = report.accuracy[kind];
    auto& map = report.map[kind];
    const auto& s = sums[kind];
    for (int k = 0; k < kMaxK; ++k) {
      acc[k] = s.accuracy[k] / n;
      map[k] = s.precision[k] / n;
    }
    report.reasonableness[kind];
  }
  return report;
}

void write_report(const EvalReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream main;
  main << "project\tmetric\ttype\trecommender\tk1\tk2\tk3\tk4\tk5\tmin\n";
  const std::pair<const char*, const std::map<RecommenderKind, std::array<double, kMaxK>>*>
      metrics[] = {{"top_k_accuracy", &report.accuracy}, {"map", &report.map}};
  for (const auto& [name, values] : metrics) {
    for (auto kind : kReportKinds) {
      if (!values->count(kind)) continue;
      const auto& row = values->at(kind);
      main << report.project << '\t' << name << '\t' << recommender_type(kind) << '\t'
           << recommender_name(kind);
      for (double v : row) main << '\t' << fixed(v);
      main << '\t' << fixed(*std::min_element(row.begin(), row.end())) << '\n';
    }
  }
  write_text(dir / "report.tsv", main.str());

  std::ostringstream reason;
  reason << "project\trecommender\tprs\tmismatches\treasonable\tpercent\n";
  for (auto kind : kReportKinds) {
    if (!report.reasonableness.count(kind)) continue;
    const auto& r = report.reasonableness.at(kind);
    reason << report.project << '\t' << recommender_name(kind) << '\t' << report.pr_count << '\t'
           << r.mismatches << '\t' << r.reasonable << '\t' << fixed(r.percent()) << '\n';
  }
  write_text(dir / "reasonableness.tsv", reason.str());

  std::ostringstream per;
  per << "pr\trecommender\tdelegate\ttop5\tacc1\tacc5\tap5\treasonable\n";
  for (const auto& o : report.per_pr) {
    per << o.pr_id << '\t' << recommender_name(o.kind) << '\t'
        << (o.delegate ? std::string(recommender_name(*o.delegate)) : "-") << '\t'
        << (o.top.empty() ? "-" : join(o.top, ',')) << '\t' << fixed(o.score.accuracy[0])
        << '\t' << fixed(o.score.accuracy[kMaxK - 1]) << '\t'
        << fixed(o.score.precision[kMaxK - 1]) << '\t'
        << (o.reasonable ? (*o.reasonable ? "yes" : "no") : "-") << '\n';
  }
  write_text(dir / "per_pr.tsv", per.str());
}

}  // namespace kurev
