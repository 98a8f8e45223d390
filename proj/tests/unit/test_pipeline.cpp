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
#include "kurev/log.hpp"
#include "kurev/pipeline.hpp"
#include "kurev/synth.hpp"

using namespace kurev;
namespace fs = std::filesystem;

namespace {

fs::path make_project(const fs::path& dir, int prs = 20) {
  SynthSpec spec;
  spec.prs = prs;
  spec.commits = 40;
  write_project(generate_project(spec), dir);
  return dir / "kurev.json";
}

std::map<std::string, std::string> snapshot(const fs::path& out) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(out)) {
    if (e.is_regular_file() && e.path().parent_path().filename() != "stamps") {
      files[fs::relative(e.path(), out).string()] = testing_support::read_file(e.path());
    }
  }
  return files;
}

class QuietLog {
 public:
  QuietLog() : old_(set_log_sink([](LogLevel, std::string_view) {})) {}
  ~QuietLog() { set_log_sink(old_); }

 private:
  LogSink old_;
};

}  // namespace

TEST(Config, ResolvesRelativePaths) {
  testing_support::TempDir dir;
  const ProjectConfig c = load_config(make_project(dir.path()));
  EXPECT_EQ(c.repo, dir.path() / "repo");
  EXPECT_EQ(c.prs, dir.path() / "prs.jsonl");
  EXPECT_EQ(c.output_dir, dir.path() / "out");
  EXPECT_EQ(c.project, "synthetic");
  EXPECT_DOUBLE_EQ(c.train_fraction, 0.8);
}

TEST(Config, MissingPrExportIsReportedFirst) {
  testing_support::TempDir dir;
  const fs::path cfg = make_project(dir.path());
  fs::remove(dir.path() / "prs.jsonl");
  try {
    load_config(cfg);
    FAIL();
  } catch (const SetupError& e) {
    EXPECT_NE(std::string(e.what()).find((dir.path() / "prs.jsonl").string()), std::string::npos);
  }
  EXPECT_FALSE(fs::exists(dir.path() / "out"));
}

TEST(Config, RejectsBadSettings) {
  testing_support::TempDir dir;
  make_project(dir.path());
  const auto cfg = dir.path() / "bad.json";
  testing_support::write_file(cfg, R"({"repo": "repo", "prs": "prs.jsonl", "colour": 1})");
  EXPECT_THROW(load_config(cfg), UsageError);
  testing_support::write_file(cfg, R"({"repo": "repo", "prs": "prs.jsonl", "train_fraction": 1.5})");
  EXPECT_THROW(load_config(cfg), UsageError);
  testing_support::write_file(cfg, R"({"prs": "prs.jsonl"})");
  EXPECT_THROW(load_config(cfg), UsageError);
  testing_support::write_file(cfg, "{");
  EXPECT_THROW(load_config(cfg), UsageError);
}

TEST(Aliases, LoadsObject) {
  testing_support::TempDir dir;
  testing_support::write_file(dir.path() / "a.json", R"({"Old <o@x.org>": "New <n@x.org>"})");
  EXPECT_EQ(load_aliases(dir.path() / "a.json").resolve("old <o@x.org>"), "new <n@x.org>");
  testing_support::write_file(dir.path() / "b.json", R"(["x"])");
  EXPECT_THROW(load_aliases(dir.path() / "b.json"), DataError);
}

TEST(Pipeline, RunsCachesAndForces) {
  QuietLog quiet;
  testing_support::TempDir dir;
  const ProjectConfig c = load_config(make_project(dir.path()));
  const auto first = run_pipeline(c);
  ASSERT_EQ(first.size(), 5u);
  const std::vector<std::string> names = {"mine", "prs", "profiles", "evaluate", "cluster"};
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].name, names[i]);
    EXPECT_FALSE(first[i].cached);
  }
  const auto before = snapshot(c.output_dir);
  EXPECT_TRUE(before.count("report/report.tsv"));
  EXPECT_TRUE(before.count("cluster/summary.tsv"));
  EXPECT_TRUE(before.count("profiles/dev_expertise.tsv"));

  for (const auto& r : run_pipeline(c)) EXPECT_TRUE(r.cached) << r.name;
  EXPECT_EQ(snapshot(c.output_dir), before);

  std::vector<std::string> seen;
  PipelineOptions force;
  force.force = true;
  force.on_stage = [&](const StageResult& r) {
    EXPECT_FALSE(r.cached);
    seen.push_back(r.name);
  };
  run_pipeline(c, force);
  EXPECT_EQ(seen, names);
  EXPECT_EQ(snapshot(c.output_dir), before);
}

TEST(Pipeline, ChangedInputInvalidatesDownstream) {
  QuietLog quiet;
  testing_support::TempDir dir;
  ProjectConfig c = load_config(make_project(dir.path()));
  run_pipeline(c);
  c.seed += 1;
  const auto again = run_pipeline(c);
  EXPECT_TRUE(again[0].cached);
  EXPECT_TRUE(again[1].cached);
  EXPECT_TRUE(again[2].cached);
  EXPECT_FALSE(again[3].cached);
  EXPECT_FALSE(again[4].cached);
}

TEST(Pipeline, DamagedOutputIsRebuilt) {
  QuietLog quiet;
  testing_support::TempDir dir;
  const ProjectConfig c = load_config(make_project(dir.path()));
  run_pipeline(c);
  const auto before = snapshot(c.output_dir);
  testing_support::write_file(c.output_dir / "report" / "report.tsv", "junk");
  const auto again = run_pipeline(c);
  EXPECT_FALSE(again[3].cached);
  EXPECT_EQ(snapshot(c.output_dir), before);
}

TEST(Pipeline, HashFilesDependsOnContent) {
  testing_support::TempDir dir;
  testing_support::write_file(dir.path() / "a", "1");
  const std::string h1 = hash_files({dir.path() / "a"});
  testing_support::write_file(dir.path() / "a", "2");
  EXPECT_NE(hash_files({dir.path() / "a"}), h1);
  EXPECT_EQ(h1.size(), 64u);
}
