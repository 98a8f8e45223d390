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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kurev/history.hpp"
#include "kurev/profiles.hpp"
#include "kurev/pull_requests.hpp"

namespace kurev {

enum class RecommenderKind {
  kKurec,
  kRf,
  kChrev,
  kEr,
  kCf,
  kAdFreq,
  kAdRec,
  kAdHybrid,
};

/// Base recommenders in the fixed tie-break order.
inline constexpr std::array<RecommenderKind, 5> kBaseKinds = {
    RecommenderKind::kKurec, RecommenderKind::kRf, RecommenderKind::kChrev,
    RecommenderKind::kEr, RecommenderKind::kCf};

/// All eight, in report order.
inline constexpr std::array<RecommenderKind, 8> kReportKinds = {
    RecommenderKind::kCf,     RecommenderKind::kRf,    RecommenderKind::kEr,
    RecommenderKind::kChrev,  RecommenderKind::kKurec, RecommenderKind::kAdFreq,
    RecommenderKind::kAdRec,  RecommenderKind::kAdHybrid};

std::string_view recommender_name(RecommenderKind kind);  // "KUREC", "AD_FREQ"
std::optional<RecommenderKind> parse_recommender(std::string_view text);
/// "Baseline", "KU" or "Combined".
std::string_view recommender_type(RecommenderKind kind);

struct RankedCandidate {
  std::string developer;
  double score = 0.0;

  bool operator==(const RankedCandidate&) const = default;
};

struct Recommendation {
  std::int64_t pr_id = 0;
  RecommenderKind kind = RecommenderKind::kKurec;
  std::vector<RankedCandidate> ranked;

  std::vector<std::string> top(std::size_t k) const;
};

/// Sorts by score descending then identity ascending, dropping `author`.
std::vector<RankedCandidate> rank_scores(const std::map<std::string, double>& scores,
                                         const std::string& author);

/// 0 without a prior touch, else 1 / max(1, calendar days from last to open).
/// Throws ContractViolation when last is not before pr_open.
double recency_bonus(std::optional<Timestamp> last, Timestamp pr_open);

struct KurecScore {
  double dev = 0.0;
  double rev = 0.0;
  double total() const { return dev + rev; }
};

/// Per-candidate DevScore and RevScore. Throws NoKnowledgeUnitsError when
/// `pr_kus` is all zero.
std::map<std::string, KurecScore> kurec_scores(const PullRequest& pr, const Profile& dev,
                                               const Profile& rev, const KuVector& pr_kus);
Recommendation kurec(const PullRequest& pr, const Profile& dev, const Profile& rev,
                     const KuVector& pr_kus);

/// Only commits authored before the PR opened are counted.
Recommendation recommend_cf(const PullRequest& pr, const std::vector<CommitRecord>& commits);

enum class RfMode { kReviewedPrs, kReviewComments };

Recommendation recommend_rf(const PullRequest& pr, const std::vector<PullRequest>& prior,
                            RfMode mode = RfMode::kReviewedPrs);
Recommendation recommend_er(const PullRequest& pr, const std::vector<CommitRecord>& commits);

struct ChrevFileStats {
  std::size_t comments = 0;        // C_f
  std::size_t total_comments = 0;  // C'_f
  std::size_t workdays = 0;        // W_f
  std::size_t total_workdays = 0;  // W'_f
  std::int64_t last_day = 0;       // T_f, UTC day number
  std::int64_t total_last_day = 0; // T'_f
};

double chrev_xfactor(const ChrevFileStats& s);
/// Stats for every reviewer who commented on `path` in PRs before `pr`.
std::map<std::string, ChrevFileStats> chrev_file_stats(const PullRequest& pr,
                                                       const std::vector<PullRequest>& prior,
                                                       const std::string& path);
Recommendation recommend_chrev(const PullRequest& pr, const std::vector<PullRequest>& prior);

struct RecommenderOptions {
  RfMode rf_mode = RfMode::kReviewedPrs;
};

/// Runs the five base recommenders against one project's history, building
/// profiles incrementally as PRs are visited in time order.
class BaseRecommenders {
 public:
  /// `history` holds every PR that may serve as prior knowledge.
  BaseRecommenders(const KuStore& store, std::vector<PullRequest> history,
                   RecommenderOptions options = {});

  /// KUREC throws NoKnowledgeUnitsError for a PR without KUs.
  Recommendation recommend(RecommenderKind kind, const PullRequest& pr);

  KuVector pr_kus(const PullRequest& pr) const;
  std::vector<PullRequest> prior_prs(const PullRequest& pr) const;
  std::vector<CommitRecord> prior_commits(const PullRequest& pr) const;
  const KuStore& store() const { return store_; }
  const std::vector<PullRequest>& history() const { return history_; }

 private:
  const KuStore& store_;
  std::vector<PullRequest> history_;
  RecommenderOptions options_;
  DevProfileBuilder dev_builder_;
  RevProfileBuilder rev_builder_;
};

}  // namespace kurev
