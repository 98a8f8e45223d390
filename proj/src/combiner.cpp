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

#include "kurev/combiner.hpp"

#include <algorithm>

#include "kurev/error.hpp"
#include "kurev/log.hpp"

namespace kurev {
namespace {

// Position in the fixed tie order.
std::size_t order_of(RecommenderKind kind) {
  const auto it = std::find(kBaseKinds.begin(), kBaseKinds.end(), kind);
  if (it == kBaseKinds.end()) {
    throw ContractViolation(std::string(recommender_name(kind)) + " is not a base recommender");
  }
  return static_cast<std::size_t>(it - kBaseKinds.begin());
}

// Highest count wins; ties go to the earlier kind.
RecommenderKind argmax_count(const std::map<RecommenderKind, std::uint64_t>& counts) {
  RecommenderKind best = kBaseKinds.front();
  std::uint64_t best_count = 0;
  bool any = false;
  for (auto kind : kBaseKinds) {
    const auto it = counts.find(kind);
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    if (!any || c > best_count) {
      best = kind;
      best_count = c;
      any = true;
    }
  }
  return best;
}

double combined_of(const PrScore& sums, std::size_t n) {
  double acc = 0.0;
  double ap = 0.0;
  for (int k = 0; k < kMaxK; ++k) {
    acc += sums.accuracy[k];
    ap += sums.precision[k];
  }
  const double denom = static_cast<double>(n) * kMaxK;
  return (acc / denom + ap / denom) / 2.0;
}

}  // namespace

RecommenderKind combined_kind(BrstVariant variant) {
  switch (variant) {
    case BrstVariant::kFreq: return RecommenderKind::kAdFreq;
    case BrstVariant::kRec: return RecommenderKind::kAdRec;
    case BrstVariant::kHybrid: return RecommenderKind::kAdHybrid;
  }
  return RecommenderKind::kAdFreq;
}

RecommenderKind Brst::choose(std::mt19937_64& rng) const {
  if (empty()) return kBaseKinds[rng() % kBaseKinds.size()];
  switch (variant_) {
    case BrstVariant::kFreq: return argmax_count(freq_counts_);
    case BrstVariant::kRec: return *last_best_;
    case BrstVariant::kHybrid: {
      std::map<RecommenderKind, std::uint64_t> counts;
      for (auto k : window_) ++counts[k];
      return argmax_count(counts);
    }
  }
  return kBaseKinds.front();
}

void Brst::record(RecommenderKind best) {
  order_of(best);
  ++completed_;
  switch (variant_) {
    case BrstVariant::kFreq: ++freq_counts_[best]; break;
    case BrstVariant::kRec: last_best_ = best; break;
    case BrstVariant::kHybrid:
      window_.push_back(best);
      while (window_.size() > kHybridWindow) window_.pop_front();
      break;
  }
}

PrScore score_ranking(const std::vector<std::string>& ranked, const ReviewerSet& truth) {
  PrScore s;
  for (int k = 1; k <= kMaxK; ++k) {
    s.accuracy[k - 1] = is_correct(ranked, truth, k) ? 1.0 : 0.0;
    s.precision[k - 1] = average_precision(ranked, truth, k);
  }
  return s;
}

void PerformanceTable::add(const PrScores& scores) {
  for (auto kind : kBaseKinds) {
    const auto it = scores.find(kind);
    if (it == scores.end()) {
      throw ContractViolation(std::string("missing score for ") +
                              std::string(recommender_name(kind)));
    }
    auto& sum = sums_[kind];
    for (int k = 0; k < kMaxK; ++k) {
      sum.accuracy[k] += it->second.accuracy[k];
      sum.precision[k] += it->second.precision[k];
    }
  }
  ++completed_;
}

double PerformanceTable::combined(RecommenderKind kind) const {
  if (completed_ == 0) return 0.0;
  const auto it = sums_.find(kind);
  return it == sums_.end() ? 0.0 : combined_of(it->second, completed_);
}

RecommenderKind PerformanceTable::best() const {
  if (completed_ == 0) throw ContractViolation("no completed PR to pick a best performer from");
  RecommenderKind best = kBaseKinds.front();
  double best_score = combined(best);
  for (auto kind : kBaseKinds) {
    const double s = combined(kind);
    if (s > best_score + 1e-12) {
      best = kind;
      best_score = s;
    }
  }
  return best;
}

RecommenderKind best_performer(const std::vector<PrScores>& history) {
  PerformanceTable table;
  for (const auto& s : history) table.add(s);
  return table.best();
}

BaseResults run_base_recommenders(BaseRecommenders& base, const PullRequest& pr) {
  BaseResults out;
  for (auto kind : kBaseKinds) {
    try {
      out.recs.emplace(kind, base.recommend(kind, pr));
    } catch (const NoKnowledgeUnitsError&) {
      out.recs.emplace(kind, Recommendation{pr.id, kind, {}});
      out.kurec_unavailable = true;
    }
  }
  return out;
}

CombinerReplay::CombinerReplay(BrstVariant variant, std::uint64_t seed)
    : brst_(variant), rng_(seed) {}

CombinedStep CombinerReplay::step(const PullRequest& pr, const BaseResults& base) {
  CombinedStep out;
  out.pr_id = pr.id;
  out.chosen = brst_.choose(rng_);
  out.used = out.chosen;
  if (out.used == RecommenderKind::kKurec && base.kurec_unavailable) {
    log_info("PR " + std::to_string(pr.id) + " has no knowledge units; " +
             std::string(recommender_name(combined_kind(brst_.variant()))) +
             " falls back to RF");
    out.used = RecommenderKind::kRf;
  }
  out.recommendation = base.recs.at(out.used);
  out.recommendation.kind = combined_kind(brst_.variant());

  // Ground truth is revealed only after the delegate has been picked.
  const ReviewerSet truth(pr.reviewers.begin(), pr.reviewers.end());
  PrScores scores;
  for (const auto& [kind, rec] : base.recs) scores[kind] = score_ranking(rec.top(kMaxK), truth);
  table_.add(scores);
  brst_.record(table_.best());
  return out;
}

}  // namespace kurev
