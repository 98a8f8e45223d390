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
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "kurev/metrics.hpp"
#include "kurev/recommenders.hpp"

namespace kurev {

enum class BrstVariant { kFreq, kRec, kHybrid };

inline constexpr std::array<BrstVariant, 3> kBrstVariants = {
    BrstVariant::kFreq, BrstVariant::kRec, BrstVariant::kHybrid};
inline constexpr std::size_t kHybridWindow = 10;

/// AD_FREQ, AD_REC or AD_HYBRID.
RecommenderKind combined_kind(BrstVariant variant);

/// Best Recommender System Table.
class Brst {
 public:
  explicit Brst(BrstVariant variant) : variant_(variant) {}

  BrstVariant variant() const { return variant_; }
  const std::map<RecommenderKind, std::uint64_t>& freq_counts() const { return freq_counts_; }
  std::optional<RecommenderKind> last_best() const { return last_best_; }
  const std::deque<RecommenderKind>& window() const { return window_; }
  bool empty() const { return completed_ == 0; }

  /// Delegate for the next PR. `rng` is drawn from only while empty.
  RecommenderKind choose(std::mt19937_64& rng) const;
  /// Records the best performer of a completed PR.
  void record(RecommenderKind best);

 private:
  BrstVariant variant_;
  std::map<RecommenderKind, std::uint64_t> freq_counts_;
  std::optional<RecommenderKind> last_best_;
  std::deque<RecommenderKind> window_;
  std::size_t completed_ = 0;
};

/// Top-k hits and AP@k for k = 1..5 of one ranking on one PR.
struct PrScore {
  std::array<double, kMaxK> accuracy{};
  std::array<double, kMaxK> precision{};
};

PrScore score_ranking(const std::vector<std::string>& ranked, const ReviewerSet& truth);

/// Base-recommender scores of one completed PR.
using PrScores = std::map<RecommenderKind, PrScore>;

/// Cumulative per-kind sums over completed PRs.
class PerformanceTable {
 public:
  void add(const PrScores& scores);
  std::size_t completed() const { return completed_; }
  /// (mean top-k accuracy + MAP over k = 1..5) / 2 across completed PRs.
  double combined(RecommenderKind kind) const;
  /// Highest combined score; near-ties within 1e-12 go to the earlier kind
  /// in the fixed order. Throws ContractViolation when nothing completed.
  RecommenderKind best() const;

 private:
  std::map<RecommenderKind, PrScore> sums_;
  std::size_t completed_ = 0;
};

/// From-scratch recomputation over a list of completed PRs.
RecommenderKind best_performer(const std::vector<PrScores>& history);

/// Rankings of the five base recommenders for one PR. A KUREC failure on a
/// PR without knowledge units leaves an empty KUREC ranking.
struct BaseResults {
  std::map<RecommenderKind, Recommendation> recs;
  bool kurec_unavailable = false;
};

BaseResults run_base_recommenders(BaseRecommenders& base, const PullRequest& pr);

struct CombinedStep {
  std::int64_t pr_id = 0;
  RecommenderKind chosen = RecommenderKind::kKurec;
  RecommenderKind used = RecommenderKind::kKurec;  // differs after the RF fallback
  Recommendation recommendation;
};

/// Online protocol over chronologically ordered test PRs.
class CombinerReplay {
 public:
  CombinerReplay(BrstVariant variant, std::uint64_t seed);

  /// Picks the delegate, then updates the table with the PR's ground truth.
  CombinedStep step(const PullRequest& pr, const BaseResults& base);

  const Brst& brst() const { return brst_; }
  const PerformanceTable& performance() const { return table_; }

 private:
  Brst brst_;
  PerformanceTable table_;
  std::mt19937_64 rng_;
};

}  // namespace kurev
