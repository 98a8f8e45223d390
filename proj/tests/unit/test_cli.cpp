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
#include "kurev/subprocess.hpp"

using kurev::ProcessResult;
namespace fs = std::filesystem;

namespace {

ProcessResult kurev_cli(std::vector<std::string> args) {
  args.insert(args.begin(), KUREV_BINARY);
  return kurev::run_process(args);
}

// One synthetic project shared by the tests of this file.
class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new testing_support::TempDir;
    const auto r = kurev::run_process({KUREV_SYNTH_BINARY, "--out", root().string(), "--prs", "20",
                                       "--commits", "40", "--open-prs", "1"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto m = kurev_cli({"mine", "--repo", (root() / "repo").string(), "--out", store().string(),
                              "--workers", "1"});
    ASSERT_EQ(m.exit_code, 0) << m.err;
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }

  static fs::path root() { return dir_->path() / "project"; }
  static fs::path store() { return dir_->path() / "store"; }
  static fs::path prs() { return root() / "prs.jsonl"; }

 private:
  static testing_support::TempDir* dir_;
};

testing_support::TempDir* Cli::dir_ = nullptr;

}  // namespace

TEST_F(Cli, HelpListsSubcommands) {
  const auto r = kurev_cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  for (const char* sub : {"detect", "mine", "prs", "profiles", "recommend", "evaluate", "cluster",
                          "pipeline"}) {
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  }
  EXPECT_EQ(kurev_cli({"recommend", "--help"}).exit_code, 0);
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(kurev_cli({}).exit_code, 1);
  EXPECT_EQ(kurev_cli({"frobnicate"}).exit_code, 1);
  EXPECT_EQ(kurev_cli({"recommend", "--store", store().string()}).exit_code, 1);
  EXPECT_EQ(kurev_cli({"recommend", "--store", store().string(), "--prs", prs().string(), "--pr",
                       "101", "--which", "NOPE"})
                .exit_code,
            1);
}

TEST_F(Cli, DataErrorsExitTwo) {
  testing_support::TempDir dir;
  testing_support::write_file(dir.path() / "bad.jsonl", "{\"id\": 1}\n");
  const auto r = kurev_cli({"prs", "validate", (dir.path() / "bad.jsonl").string()});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("record 1"), std::string::npos);
  testing_support::write_file(dir.path() / "bin.java", std::string("\0\1\2", 3));
  EXPECT_EQ(kurev_cli({"detect", (dir.path() / "bin.java").string()}).exit_code, 2);
  EXPECT_EQ(kurev_cli({"mine", "--repo", dir.path().string(), "--out", (dir.path() / "s").string()})
                .exit_code,
            2);
}

TEST_F(Cli, DetectPrintsKuCounts) {
  const fs::path file = testing_support::fixture_dir() / "ku" / "K03.java";
  const auto r = kurev_cli({"detect", file.string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("file\tK1\tK2", 0), 0u);
  const auto caps = kurev_cli({"detect", "--capabilities", file.string()});
  EXPECT_NE(caps.out.find("\tK3.C"), std::string::npos);
}

TEST_F(Cli, PrsSplit) {
  testing_support::TempDir dir;
  const auto r = kurev_cli({"prs", "split", prs().string(), "--out-train",
                            (dir.path() / "train.jsonl").string(), "--out-test",
                            (dir.path() / "test.jsonl").string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
  const auto train = count(testing_support::read_file(dir.path() / "train.jsonl"));
  const auto test = count(testing_support::read_file(dir.path() / "test.jsonl"));
  EXPECT_GT(train, test);
  EXPECT_LE(train + test, 20);
  EXPECT_EQ(kurev_cli({"prs", "validate", prs().string()}).exit_code, 0);
}

TEST_F(Cli, RecommendEveryKind) {
  for (const char* which : {"CF", "RF", "ER", "CHREV", "AD_FREQ", "AD_REC", "AD_HYBRID"}) {
    const auto r = kurev_cli({"recommend", "--store", store().string(), "--prs", prs().string(),
                              "--pr", "110", "--which", which, "--top", "3"});
    EXPECT_EQ(r.exit_code, 0) << which << ": " << r.err;
  }
  const auto combined = kurev_cli({"recommend", "--store", store().string(), "--prs",
                                   prs().string(), "--pr", "110", "--which", "ad_rec"});
  EXPECT_NE(combined.err.find("delegate:"), std::string::npos);
  const auto missing = kurev_cli({"recommend", "--store", store().string(), "--prs",
                                  prs().string(), "--pr", "999999", "--which", "CF"});
  EXPECT_EQ(missing.exit_code, 2);
}

TEST_F(Cli, ProfilesEvaluateCluster) {
  testing_support::TempDir dir;
  const auto p = kurev_cli({"profiles", "--store", store().string(), "--prs", prs().string(),
                            "--cutoff", "2021-06-01T00:00:00Z", "--out", (dir.path() / "prof").string()});
  EXPECT_EQ(p.exit_code, 0) << p.err;
  EXPECT_TRUE(fs::exists(dir.path() / "prof" / "dev_expertise.tsv"));

  kurev_cli({"prs", "split", prs().string(), "--out-train", (dir.path() / "train.jsonl").string(),
             "--out-test", (dir.path() / "test.jsonl").string()});
  const auto e = kurev_cli({"evaluate", "--train", (dir.path() / "train.jsonl").string(), "--test",
                            (dir.path() / "test.jsonl").string(), "--store", store().string(),
                            "--out", (dir.path() / "report").string()});
  EXPECT_EQ(e.exit_code, 0) << e.err;
  EXPECT_TRUE(fs::exists(dir.path() / "report" / "report.tsv"));

  const auto c = kurev_cli({"cluster", "--store", store().string(), "--out",
                            (dir.path() / "cluster").string(), "--k-max", "4"});
  EXPECT_EQ(c.exit_code, 0) << c.err;
  EXPECT_TRUE(fs::exists(dir.path() / "cluster" / "summary.tsv"));
}

TEST_F(Cli, PipelineReportsStages) {
  testing_support::TempDir dir;
  const auto s = kurev::run_process({KUREV_SYNTH_BINARY, "--out", dir.path().string()});
  ASSERT_EQ(s.exit_code, 0) << s.err;
  const std::string cfg = (dir.path() / "kurev.json").string();
  const auto first = kurev_cli({"pipeline", cfg});
  ASSERT_EQ(first.exit_code, 0) << first.err;
  EXPECT_EQ(first.out, "mine\tdone\nprs\tdone\nprofiles\tdone\nevaluate\tdone\ncluster\tdone\n");
  const auto second = kurev_cli({"pipeline", cfg});
  EXPECT_EQ(second.out,
            "mine\tcached\nprs\tcached\nprofiles\tcached\nevaluate\tcached\ncluster\tcached\n");
  fs::remove(dir.path() / "prs.jsonl");
  const auto missing = kurev_cli({"pipeline", cfg});
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_NE(missing.err.find("prs.jsonl"), std::string::npos);
}
