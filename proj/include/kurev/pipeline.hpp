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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kurev/identity.hpp"
#include "kurev/recommenders.hpp"

namespace kurev {

/// Pipeline settings. Relative paths are taken from the config file's folder.
struct ProjectConfig {
  std::string project;
  std::filesystem::path repo;
  std::filesystem::path prs;
  std::optional<std::filesystem::path> catalog;
  std::optional<std::filesystem::path> aliases;
  std::filesystem::path cache_dir;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  double train_fraction = 0.8;
  RfMode rf_mode = RfMode::kReviewedPrs;
  int k_max = 100;
  bool all_commits = false;
  unsigned workers = 0;
};

/// Reads and validates a JSON config. Throws UsageError for malformed
/// settings and SetupError naming any input path that does not exist.
ProjectConfig load_config(const std::filesystem::path& path);

/// JSON object mapping alias identities to canonical ones.
AliasMap load_aliases(const std::filesystem::path& path);

struct StageResult {
  std::string name;
  bool cached = false;
};

struct PipelineOptions {
  bool force = false;  // ignore stage stamps
  std::function<void(const StageResult&)> on_stage;
};

/// mine, prs, profiles, evaluate, cluster. A stage is skipped when the hash
/// of its inputs matches the stamp left by its last successful run.
std::vector<StageResult> run_pipeline(const ProjectConfig& config,
                                      const PipelineOptions& options = {});

/// SHA-256 over the named files' contents, in order.
std::string hash_files(const std::vector<std::filesystem::path>& files);

}  // namespace kurev
