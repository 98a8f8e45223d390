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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kurev/combiner.hpp"
#include "kurev/history.hpp"
#include "kurev/metrics.hpp"
#include "kurev/pull_requests.hpp"
#include "kurev/recommenders.hpp"

namespace kurev {

inline constexpr std::int64_t kReasonableWindowDays = 183;

/// Whether a wrong top-1 pick had recently worked on the PR's files: true when
/// the files of `top1`'s commits and authored PRs in the 183 days before the PR
/// opened cover at least half of its changed files. Nullopt when `top1` is a
/// true reviewer, where the metric does not apply.
std::optional<bool> reasonableness(const PullRequest& pr, const std::string& top1,
                                   const std::vector<CommitRecord>& commits,
                                   const std::vector<PullRequest>& prs);

struct ReasonableStats {
  std::size_t mismatches = 0;
  std::size_t reasonable = 0;
  /// Percentage of mismatches judged reasonable; 0 without mismatches.
  double percent() const;
};

struct PrOutcome {
  std::int64_t pr_id = 0;
  RecommenderKind kind = RecommenderKind::kKurec;
  std::vector<std::string> top;
  PrScore score;
  std::optional<bool> reasonable;
  /// Delegate actually used, for the combined recommenders.
  std::optional<RecommenderKind> delegate;
};

struct EvalReport {
  std::string project;
  std::size_t pr_count = 0;
  std::map<RecommenderKind, std::array<double, kMaxK>> accuracy;
  std::map<RecommenderKind, std::array<double, kMaxK>> map;
  std::map<RecommenderKind, ReasonableStats> reasonableness;
  std::vector<PrOutcome> per_pr;
};

struct EvalOptions {
  std::uint64_t seed = 0;
  RecommenderOptions recommender;
};

/// Replays the test PRs in time order through all eight recommenders.
/// `history` holds every PR usable as prior knowledge (train and test).
/// Throws DataError when `test` is empty.
EvalReport evaluate(const std::string& project, const KuStore& store,
                    const std::vector<PullRequest>& history, std::vector<PullRequest> test,
                    const EvalOptions& options);

/// Writes report.tsv, reasonableness.tsv and per_pr.tsv into `dir`. Kinds
/// missing from the report maps are left out.
void write_report(const EvalReport& report, const std::filesystem::path& dir);

}  // namespace kurev
