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
#include "kurev/subprocess.hpp"

using kurev::run_process;

TEST(Subprocess, CapturesOutputAndStatus) {
  const auto r = run_process({"sh", "-c", "echo out; echo err >&2; exit 3"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(r.out, "out\n");
  EXPECT_EQ(r.err, "err\n");
}

TEST(Subprocess, FeedsInputAndEnvironment) {
  kurev::ProcessOptions opts;
  opts.input = "abc";
  opts.env = {{"KUREV_PROBE", "42"}};
  const auto r = run_process({"sh", "-c", "cat; printf %s \"$KUREV_PROBE\""}, opts);
  EXPECT_EQ(r.out, "abc42");
}

TEST(Subprocess, RunsInDirectory) {
  testing_support::TempDir dir;
  kurev::ProcessOptions opts;
  opts.cwd = dir.path();
  const auto r = run_process({"pwd", "-P"}, opts);
  EXPECT_EQ(r.out, std::filesystem::canonical(dir.path()).string() + "\n");
}

TEST(Subprocess, LargeOutputDoesNotDeadlock) {
  kurev::ProcessOptions opts;
  opts.input = std::string(1 << 20, 'x');
  const auto r = run_process({"cat"}, opts);
  EXPECT_EQ(r.out.size(), std::size_t{1} << 20);
}

TEST(Subprocess, MissingProgramIsSetupError) {
  EXPECT_THROW(run_process({"/nonexistent/kurev-probe"}), kurev::SetupError);
}
