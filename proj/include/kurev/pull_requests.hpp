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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kurev/identity.hpp"
#include "kurev/timestamp.hpp"

namespace kurev {

enum class PrState { kOpen, kClosed };

struct ReviewComment {
  std::string reviewer;
  std::optional<std::string> path;  // null for discussion comments
  Timestamp commented_at;

  bool operator==(const ReviewComment&) const = default;
};

struct PullRequest {
  std::int64_t id = 0;
  Timestamp opened_at;
  PrState state = PrState::kClosed;
  std::string author;
  std::vector<std::string> changed_files;
  std::vector<std::string> reviewers;  // sorted, unique
  std::vector<ReviewComment> review_comments;
  std::optional<std::string> head_commit;

  std::vector<std::string> java_files() const;
  bool reviewed_by(std::string_view identity) const;

  bool operator==(const PullRequest&) const = default;
};

/// PRs of one project ordered by (opened_at, id).
struct PrDataset {
  std::string project;
  std::vector<PullRequest> prs;

  const PullRequest* find(std::int64_t id) const;
};

inline constexpr std::size_t kMinEligiblePrs = 100;

/// Parses the newline-delimited PR export. Identities pass through `aliases`.
PrDataset parse_prs(std::string_view text, const AliasMap& aliases = {});
PrDataset load_prs(const std::filesystem::path& path, const AliasMap& aliases = {});

/// One JSON object per line, in dataset order.
std::string serialize_prs(const PrDataset& ds);
void save_prs(const PrDataset& ds, const std::filesystem::path& path);

struct FilterResult {
  PrDataset kept;
  bool eligible = false;  // kept.prs.size() >= kMinEligiblePrs
};

/// Closed PRs with at least one reviewer and one changed Java file.
FilterResult filter_prs(const PrDataset& ds);

/// First floor(fraction * n) PRs train, the rest test. Throws SplitError for
/// fewer than five PRs or when either side would be empty.
std::pair<PrDataset, PrDataset> chronological_split(const PrDataset& ds,
                                                    double train_fraction = 0.8);

}  // namespace kurev
