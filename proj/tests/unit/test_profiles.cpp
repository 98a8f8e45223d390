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
#include "kurev/profiles.hpp"

using namespace kurev;

namespace {

Timestamp day(int d) { return Timestamp::from_civil(2021, 1, static_cast<unsigned>(d), 12); }

KuVector kus(std::initializer_list<std::pair<int, std::uint64_t>> items) {
  KuVector v;
  for (auto [k, n] : items) v[KuId::of(k)] = n;
  return v;
}

// ann touches K1 twice, bob touches K1 once and K2 three times.
KuStore sample_store() {
  std::vector<CommitRecord> commits = {
      {"c1", "ann", day(1), {"A.java"}, {"A.java"}},
      {"c2", "bob", day(2), {"A.java", "B.java"}, {"A.java", "B.java", "x.md"}},
      {"c3", "ann", day(5), {"B.java"}, {"B.java"}},
  };
  std::vector<FileKuRecord> files = {
      {"c1", "A.java", FileStatus::kOk, kus({{1, 2}})},
      {"c2", "A.java", FileStatus::kOk, kus({{1, 1}})},
      {"c2", "B.java", FileStatus::kOk, kus({{2, 3}})},
      {"c3", "B.java", FileStatus::kParseError, std::nullopt},
  };
  return KuStore(std::move(commits), std::move(files), "h");
}

}  // namespace

TEST(Profiles, DevelopmentMatrixNormalizesColumns) {
  const KuStore store = sample_store();
  const Profile p = dev_exp_matrix(store, day(3));
  EXPECT_DOUBLE_EQ(p.matrix.value("ann", KuId::of(1)), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(p.matrix.value("bob", KuId::of(1)), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(p.matrix.value("bob", KuId::of(2)), 1.0);
  EXPECT_DOUBLE_EQ(p.matrix.value("ann", KuId::of(2)), 0.0);
  EXPECT_DOUBLE_EQ(p.matrix.value("nobody", KuId::of(1)), 0.0);
  EXPECT_EQ(p.last.get("ann", KuId::of(1)), day(1));
  EXPECT_FALSE(p.last.get("ann", KuId::of(2)).has_value());
}

TEST(Profiles, CutoffIsStrict) {
  const KuStore store = sample_store();
  const Profile p = dev_exp_matrix(store, day(2));
  EXPECT_DOUBLE_EQ(p.matrix.value("ann", KuId::of(1)), 1.0);
  EXPECT_FALSE(p.matrix.has("bob"));
}

TEST(Profiles, ParseErrorsGiveNoCredit) {
  const KuStore store = sample_store();
  const Profile p = dev_exp_matrix(store, day(9));
  EXPECT_TRUE(p.matrix.has("ann"));
  EXPECT_DOUBLE_EQ(p.matrix.value("ann", KuId::of(2)), 0.0);
  EXPECT_EQ(p.last.get("ann", KuId::of(1)), day(1));
}

TEST(Profiles, PrKusUseLatestStateBeforeOpening) {
  const KuStore store = sample_store();
  PullRequest pr;
  pr.opened_at = day(3);
  pr.changed_files = {"A.java", "B.java", "C.java", "README.md"};
  EXPECT_EQ(pr_kus(store, pr), kus({{1, 1}, {2, 3}}));
  pr.opened_at = day(6);  // B.java last failed to parse
  EXPECT_EQ(pr_kus(store, pr), kus({{1, 1}}));
  pr.head_commit = "c1";
  EXPECT_EQ(pr_kus(store, pr), kus({{1, 2}}));
}

TEST(Profiles, ReviewMatrixCreditsEveryReviewer) {
  const KuStore store = sample_store();
  PrDataset prs;
  PullRequest a;
  a.id = 1;
  a.opened_at = day(3);
  a.author = "ann";
  a.changed_files = {"B.java"};
  a.reviewers = {"bob", "cid"};
  PullRequest b = a;
  b.id = 2;
  b.opened_at = day(4);
  b.changed_files = {"A.java"};
  b.reviewers = {"cid"};
  prs.prs = {a, b};
  const Profile p = rev_exp_matrix(prs, store, day(10));
  EXPECT_DOUBLE_EQ(p.matrix.value("bob", KuId::of(2)), 0.5);
  EXPECT_DOUBLE_EQ(p.matrix.value("cid", KuId::of(2)), 0.5);
  EXPECT_DOUBLE_EQ(p.matrix.value("cid", KuId::of(1)), 1.0);
  EXPECT_EQ(p.last.get("cid", KuId::of(1)), day(4));

  RevProfileBuilder builder(prs.prs, store);
  const Profile early = builder.at(day(4));
  EXPECT_FALSE(early.last.get("cid", KuId::of(1)).has_value());
  const Profile late = builder.at(day(10));
  EXPECT_DOUBLE_EQ(late.matrix.value("cid", KuId::of(1)), 1.0);
}

TEST(Profiles, BuilderMatchesBatchComputation) {
  const KuStore store = sample_store();
  DevProfileBuilder builder(store);
  for (int d : {2, 3, 9, 1, 6}) {
    const Profile inc = builder.at(day(d));
    const Profile batch = dev_exp_matrix(store, day(d));
    EXPECT_EQ(inc.matrix.developers(), batch.matrix.developers());
    EXPECT_EQ(inc.matrix.values(), batch.matrix.values());
    EXPECT_EQ(inc.last.entries(), batch.last.entries());
  }
}

TEST(Profiles, WritesTsv) {
  testing_support::TempDir dir;
  const Profile p = dev_exp_matrix(sample_store(), day(3));
  write_matrix_tsv(p.matrix, dir.path() / "m.tsv", {"ann", "bob"});
  write_last_touch_tsv(p.last, dir.path() / "t.tsv", {"ann"});
  const std::string m = testing_support::read_file(dir.path() / "m.tsv");
  EXPECT_EQ(m.substr(0, 16), "developer\tK1\tK2\t");
  EXPECT_NE(m.find("\nbob\t0.33333333333333331\t1\t0"), std::string::npos);
  const std::string t = testing_support::read_file(dir.path() / "t.tsv");
  EXPECT_NE(t.find("\nann\t2021-01-01T12:00:00Z\t-"), std::string::npos);
}
