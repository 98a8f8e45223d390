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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kurev/error.hpp"
#include "kurev/evaluation.hpp"
#include "oracle.hpp"

using namespace kurev;

namespace {

Timestamp day(int d) { return Timestamp::from_civil(2021, 1, 1).plus_days(d); }

PullRequest pr_with(std::vector<std::string> files, std::vector<std::string> reviewers) {
  PullRequest pr;
  pr.id = 100;
  pr.opened_at = day(300);
  pr.author = "author";
  pr.changed_files = std::move(files);
  pr.reviewers = std::move(reviewers);
  return pr;
}

}  // namespace

TEST(Evaluation, ReasonablenessOnlyForMismatches) {
  const PullRequest pr = pr_with({"a", "b"}, {"r"});
  EXPECT_FALSE(reasonableness(pr, "r", {}, {}).has_value());
}

TEST(Evaluation, RecentActivityMakesMismatchReasonable) {
  const PullRequest pr = pr_with({"a", "b", "c", "d"}, {"r"});
  const std::vector<CommitRecord> commits = {{"1", "t", day(270), {}, {"a", "b", "c", "d"}}};
  EXPECT_EQ(reasonableness(pr, "t", commits, {}), true);
  EXPECT_EQ(reasonableness(pr, "u", commits, {}), false);
}

TEST(Evaluation, HalfTheFilesIsEnough) {
  const PullRequest pr = pr_with({"a", "b", "c", "d"}, {"r"});
  PullRequest earlier = pr_with({"b", "z"}, {"x"});
  earlier.id = 1;
  earlier.author = "t";
  earlier.opened_at = day(200);
  const std::vector<CommitRecord> commits = {{"1", "t", day(250), {}, {"a"}}};
  EXPECT_EQ(reasonableness(pr, "t", commits, {earlier}), true);
  EXPECT_EQ(reasonableness(pr, "t", commits, {}), false);
}

TEST(Evaluation, WindowIsHalfAYear) {
  const PullRequest pr = pr_with({"a"}, {"r"});
  const std::vector<CommitRecord> edge = {{"1", "t", day(300 - 183), {}, {"a"}}};
  const std::vector<CommitRecord> before = {{"1", "t", day(300 - 184), {}, {"a"}}};
  const std::vector<CommitRecord> after = {{"1", "t", day(300), {}, {"a"}}};
  EXPECT_EQ(reasonableness(pr, "t", edge, {}), true);
  EXPECT_EQ(reasonableness(pr, "t", before, {}), false);
  EXPECT_EQ(reasonableness(pr, "t", after, {}), false);
}

TEST(Evaluation, PercentOfMismatches) {
  EXPECT_EQ(ReasonableStats{}.percent(), 0.0);
  EXPECT_DOUBLE_EQ((ReasonableStats{4, 1}.percent()), 25.0);
}

TEST(Evaluation, ReportOnSyntheticProject) {
  testing_support::TempDir dir;
  SynthSpec spec;
  spec.prs = 20;
  spec.commits = 50;
  const auto syn = testing_support::make_synth_store(spec, dir.path());
  const auto filtered = filter_prs(syn.prs).kept;
  const auto [train, test] = chronological_split(filtered, 0.8);
  EXPECT_THROW(evaluate("p", syn.store, filtered.prs, {}, {}), DataError);

  const EvalReport report = evaluate("p", syn.store, filtered.prs, test.prs, {.seed = 4});
  EXPECT_EQ(report.pr_count, test.prs.size());
  EXPECT_EQ(report.accuracy.size(), 8u);
  EXPECT_EQ(report.per_pr.size(), 8 * test.prs.size());
  for (const auto& [kind, acc] : report.accuracy) {
    for (int k = 1; k < kMaxK; ++k) EXPECT_LE(acc[k - 1], acc[k]) << recommender_name(kind);
    for (double v : report.map.at(kind)) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }

  // Base recommender figures agree with an independent recount.
  for (auto kind : kBaseKinds) {
    std::array<double, kMaxK> hits{};
    for (const auto& o : report.per_pr) {
      if (o.kind != kind) continue;
      const PullRequest* pr = filtered.find(o.pr_id);
      const std::set<std::string> truth(pr->reviewers.begin(), pr->reviewers.end());
      for (int k = 1; k <= kMaxK; ++k) hits[k - 1] += oracle::hit(o.top, truth, k);
    }
    for (int k = 0; k < kMaxK; ++k) {
      EXPECT_NEAR(report.accuracy.at(kind)[k], hits[k] / static_cast<double>(test.prs.size()), 1e-12);
    }
  }

  write_report(report, dir.path() / "report");
  const std::string tsv = testing_support::read_file(dir.path() / "report" / "report.tsv");
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 17);
  EXPECT_EQ(tsv.rfind("project\tmetric\ttype\trecommender\tk1\tk2\tk3\tk4\tk5\tmin\n", 0), 0u);
  const std::string reason = testing_support::read_file(dir.path() / "report" / "reasonableness.tsv");
  EXPECT_EQ(std::count(reason.begin(), reason.end(), '\n'), 9);

  const EvalReport again = evaluate("p", syn.store, filtered.prs, test.prs, {.seed = 4});
  write_report(again, dir.path() / "again");
  EXPECT_EQ(testing_support::read_file(dir.path() / "again" / "per_pr.tsv"),
            testing_support::read_file(dir.path() / "report" / "per_pr.tsv"));
}
