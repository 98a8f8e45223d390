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

#include <random>

#include "fixtures.hpp"
#include "kurev/error.hpp"
#include "kurev/pull_requests.hpp"

using namespace kurev;

namespace {

std::string record(int id, const std::string& opened, const std::string& extra = "") {
  return R"({"id": )" + std::to_string(id) + R"(, "opened_at": ")" + opened +
         R"(", "state": "closed", "author": "A <a@x.org>", "changed_files": ["src/A.java"], )"
         R"("reviewers": ["R <r@x.org>"])" +
         extra + "}\n";
}

PrDataset synthetic(std::size_t n, std::mt19937_64& rng) {
  PrDataset ds;
  for (std::size_t i = 0; i < n; ++i) {
    PullRequest pr;
    pr.id = static_cast<std::int64_t>(i + 1);
    pr.opened_at = Timestamp(static_cast<std::int64_t>(rng() % 50) * 3600);
    pr.author = "a";
    pr.changed_files = {"A.java"};
    pr.reviewers = {"r"};
    ds.prs.push_back(pr);
  }
  return ds;
}

}  // namespace

TEST(PullRequests, ParsesRecordsAndSortsChronologically) {
  const PrDataset ds = parse_prs(
      record(2, "2021-01-02T00:00:00Z") +
      record(1, "2021-01-03T00:00:00Z",
             R"(, "review_comments": [{"reviewer": "R <r@x.org>", "path": "src/A.java", )"
             R"("commented_at": "2021-01-04T00:00:00Z"}, {"reviewer": "Q <q@x.org>", )"
             R"("path": null, "commented_at": "2021-01-04T00:00:00Z"}], "head_commit": "abc")"));
  ASSERT_EQ(ds.prs.size(), 2u);
  EXPECT_EQ(ds.prs[0].id, 2);
  EXPECT_EQ(ds.prs[0].author, "a <a@x.org>");
  const PullRequest* pr = ds.find(1);
  ASSERT_NE(pr, nullptr);
  ASSERT_EQ(pr->review_comments.size(), 2u);
  EXPECT_FALSE(pr->review_comments[1].path.has_value());
  EXPECT_EQ(pr->head_commit, "abc");
  EXPECT_TRUE(pr->reviewed_by("r <r@x.org>"));
}

TEST(PullRequests, SchemaErrorsNameRecordAndField) {
  try {
    parse_prs(record(1, "2021-01-01T00:00:00Z") +
              R"({"id": 2, "opened_at": "2021-01-01T00:00:00Z", "state": "closed", )"
              R"("author": "a", "changed_files": [], "reviewers": "nobody"})" "\n");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.record(), 2u);
    EXPECT_EQ(e.field(), "reviewers");
  }
  EXPECT_THROW(parse_prs(R"({"id": 1})"), SchemaError);
  EXPECT_THROW(parse_prs(record(1, "yesterday")), SchemaError);
  EXPECT_THROW(parse_prs(record(1, "2021-01-01T00:00:00Z", R"(, "colour": "red")")), SchemaError);
  EXPECT_THROW(parse_prs(record(1, "2021-01-01T00:00:00Z") + record(1, "2021-01-02T00:00:00Z")),
               SchemaError);
  EXPECT_THROW(parse_prs("not json\n"), SchemaError);
}

TEST(PullRequests, SaveAndLoadRoundTrip) {
  testing_support::TempDir dir;
  const PrDataset ds = parse_prs(record(5, "2021-01-02T00:00:00Z",
                                        R"(, "project": "demo", "review_comments": [{"reviewer": )"
                                        R"("R <r@x.org>", "path": "src/A.java", )"
                                        R"("commented_at": "2021-01-04T00:00:00Z"}])"));
  save_prs(ds, dir.path() / "prs.jsonl");
  const PrDataset back = load_prs(dir.path() / "prs.jsonl");
  EXPECT_EQ(back.project, "demo");
  EXPECT_EQ(back.prs, ds.prs);
  EXPECT_THROW(load_prs(dir.path() / "missing.jsonl"), SetupError);
}

TEST(PullRequests, FilterKeepsClosedReviewedJavaPrs) {
  PrDataset ds = parse_prs(record(1, "2021-01-01T00:00:00Z") + record(2, "2021-01-02T00:00:00Z") +
                           record(3, "2021-01-03T00:00:00Z") + record(4, "2021-01-04T00:00:00Z"));
  ds.prs[1].state = PrState::kOpen;
  ds.prs[2].reviewers.clear();
  ds.prs[3].changed_files = {"README.md"};
  const FilterResult r = filter_prs(ds);
  ASSERT_EQ(r.kept.prs.size(), 1u);
  EXPECT_EQ(r.kept.prs[0].id, 1);
  EXPECT_FALSE(r.eligible);
}

TEST(PullRequests, SplitSizes) {
  std::mt19937_64 rng(7);
  auto sizes = [&](std::size_t n) {
    const auto [train, test] = chronological_split(synthetic(n, rng), 0.8);
    return std::make_pair(train.prs.size(), test.prs.size());
  };
  EXPECT_EQ(sizes(10), std::make_pair(std::size_t{8}, std::size_t{2}));
  EXPECT_EQ(sizes(101), std::make_pair(std::size_t{80}, std::size_t{21}));
  EXPECT_EQ(sizes(5), std::make_pair(std::size_t{4}, std::size_t{1}));
  EXPECT_THROW(sizes(4), SplitError);
  EXPECT_THROW(chronological_split(synthetic(10, rng), 1.0), SplitError);
  EXPECT_THROW(chronological_split(synthetic(10, rng), 0.0), SplitError);
}

TEST(PullRequests, SplitHasNoLeakage) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const PrDataset ds = synthetic(5 + rng() % 60, rng);
    const auto [train, test] = chronological_split(ds, 0.8);
    for (const auto& a : train.prs) {
      for (const auto& b : test.prs) {
        EXPECT_TRUE(a.opened_at < b.opened_at || (a.opened_at == b.opened_at && a.id < b.id));
      }
    }
  }
}
