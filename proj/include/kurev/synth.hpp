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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kurev/pull_requests.hpp"
#include "kurev/timestamp.hpp"

namespace kurev {

/// Shape of a generated project. Output depends only on these fields.
struct SynthSpec {
  std::string project = "synthetic";
  int developers = 5;
  int commits = 30;
  int prs = 12;
  int open_prs = 0;  // trailing PRs left open
  int files = 8;
  std::uint64_t seed = 1;
  Timestamp start = Timestamp::from_civil(2021, 1, 4, 9);
};

struct SynthFileWrite {
  std::string path;
  std::string content;  // empty means delete
};

struct SynthCommit {
  int developer = 0;
  Timestamp when;
  std::string message;
  std::vector<SynthFileWrite> writes;
};

struct SynthPr {
  std::int64_t id = 0;
  int author = 0;
  Timestamp opened_at;
  bool open = false;
  std::vector<std::string> changed_files;
  std::vector<int> reviewers;
  struct Comment {
    int reviewer = 0;
    std::string path;  // empty for a discussion comment
    Timestamp when;
  };
  std::vector<Comment> comments;
  /// Index of the commit recorded as the PR head, or -1.
  int head_commit = -1;
};

struct SynthProject {
  SynthSpec spec;
  std::vector<SynthCommit> commits;
  std::vector<SynthPr> prs;
};

std::string synth_developer_name(int index);
std::string synth_developer_email(int index);
/// Identity as the miner reports it.
std::string synth_identity(int index);

SynthProject generate_project(const SynthSpec& spec);

/// Materializes the project under `dir`: a git repository in `dir/repo`, the
/// PR export `dir/prs.jsonl` and a pipeline configuration `dir/kurev.json`.
/// Commit dates and identities are fixed so hashes are reproducible. Throws
/// SetupError when `dir/repo` already exists or git fails.
void write_project(const SynthProject& project, const std::filesystem::path& dir);

/// PR dataset of a written project; head commits resolved to hashes.
PrDataset synth_pr_dataset(const SynthProject& project,
                           const std::vector<std::string>& commit_hashes);

}  // namespace kurev
