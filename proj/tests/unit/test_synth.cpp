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
#include "kurev/synth.hpp"

using namespace kurev;

TEST(Synth, GenerationIsDeterministic) {
  SynthSpec spec;
  spec.seed = 21;
  const SynthProject a = generate_project(spec);
  const SynthProject b = generate_project(spec);
  ASSERT_EQ(a.commits.size(), 30u);
  ASSERT_EQ(a.prs.size(), 12u);
  for (std::size_t i = 0; i < a.commits.size(); ++i) {
    EXPECT_EQ(a.commits[i].when, b.commits[i].when);
    EXPECT_EQ(a.commits[i].developer, b.commits[i].developer);
    ASSERT_EQ(a.commits[i].writes.size(), b.commits[i].writes.size());
  }
  spec.seed = 22;
  const SynthProject c = generate_project(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.commits.size(); ++i) {
    differs |= a.commits[i].developer != c.commits[i].developer;
  }
  EXPECT_TRUE(differs);
}

TEST(Synth, PrsAreWellFormed) {
  SynthSpec spec;
  spec.prs = 15;
  spec.open_prs = 2;
  const SynthProject p = generate_project(spec);
  int open = 0;
  for (const auto& pr : p.prs) {
    open += pr.open;
    EXPECT_FALSE(pr.changed_files.empty());
    for (int r : pr.reviewers) EXPECT_NE(r, pr.author);
    for (const auto& c : pr.comments) EXPECT_GE(c.when, pr.opened_at);
  }
  EXPECT_EQ(open, 2);
  EXPECT_EQ(synth_identity(3), "dev3 <dev3@example.org>");
}

TEST(Synth, WrittenProjectMinesAndLoads) {
  testing_support::TempDir dir;
  SynthSpec spec;
  const auto s = testing_support::make_synth_store(spec, dir.path());
  EXPECT_EQ(s.store.commits().size(), 30u);
  EXPECT_EQ(s.prs.prs.size(), 12u);
  EXPECT_EQ(s.prs.project, "synthetic");
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "kurev.json"));
  for (const auto& pr : s.prs.prs) {
    if (pr.head_commit) EXPECT_NE(s.store.commit(*pr.head_commit), nullptr);
  }
  // Commit hashes do not depend on the wall clock.
  testing_support::TempDir other;
  const auto again = testing_support::make_synth_store(spec, other.path());
  EXPECT_EQ(again.store.commits().back().hash, s.store.commits().back().hash);
}
