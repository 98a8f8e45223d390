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

#include "kurev/recommenders.hpp"

#include <algorithm>
#include <set>

#include "kurev/error.hpp"

namespace kurev {

std::string_view recommender_name(RecommenderKind kind) {
  switch (kind) {
    case RecommenderKind::kKurec: return "KUREC";
    case RecommenderKind::kRf: return "RF";
    case RecommenderKind::kChrev: return "CHREV";
    case RecommenderKind::kEr: return "ER";
    case RecommenderKind::kCf: return "CF";
    case RecommenderKind::kAdFreq: return "AD_FREQ";
    case RecommenderKind::kAdRec: return "AD_REC";
    case RecommenderKind::kAdHybrid: return "AD_HYBRID";
  }
  return "?";
}

std::optional<RecommenderKind> parse_recommender(std::string_view text) {
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto k : kReportKinds) {
    if (recommender_name(k) == upper) return k;
  }
  return std::nullopt;
}

std::string_view recommender_type(RecommenderKind kind) {
  switch (kind) {
    case RecommenderKind::kKurec: return "KU";
    case RecommenderKind::kAdFreq:
    case RecommenderKind::kAdRec:
    case RecommenderKind::kAdHybrid: return "Combined";
    default: return "Baseline";
  }
}

std::vector<std::string> Recommendation::top(std::size_t k) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) out.push_back(ranked[i].developer);
  return out;
}

std::vector<RankedCandidate> rank_scores(const std::map<std::string, double>& scores,
                                         const std::string& author) {
  std::vector<RankedCandidate> out;
  for (const auto& [dev, score] : scores) {
    if (dev != author) out.push_back({dev, score});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.score > b.score;  // map order already ascends by identity
  });
  return out;
}

double recency_bonus(std::optional<Timestamp> last, Timestamp pr_open) {
  if (!last) return 0.0;
  if (*last >= pr_open) {
    throw ContractViolation("last touch " + last->to_rfc3339() + " is not before " +
                            pr_open.to_rfc3339());
  }
  const std::int64_t days = calendar_days_between(*last, pr_open);
  return 1.0 / static_cast<double>(std::max<std::int64_t>(1, days));
}

std::map<std::string, KurecScore> kurec_scores(const PullRequest& pr, const Profile& dev,
                                               const Profile& rev, const KuVector& pr_kus) {
  std::vector<KuId> present;
  for (int k = 1; k <= kKuCount; ++k) {
    if (pr_kus[KuId::of(k)] > 0) present.push_back(KuId::of(k));
  }
  if (present.empty()) {
    throw NoKnowledgeUnitsError("PR " + std::to_string(pr.id) + " has no knowledge units");
  }
  std::set<std::string> candidates(dev.matrix.developers().begin(),
                                   dev.matrix.developers().end());
  candidates.insert(rev.matrix.developers().begin(), rev.matrix.developers().end());
  candidates.erase(pr.author);
  std::map<std::string, KurecScore> out;
  for (const auto& d : candidates) {
    KurecScore s;
    for (KuId ku : present) {
      s.dev += dev.matrix.value(d, ku) + recency_bonus(dev.last.get(d, ku), pr.opened_at);
      s.rev += rev.matrix.value(d, ku) + recency_bonus(rev.last.get(d, ku), pr.opened_at);
    }
    out.emplace(d, s);
  }
  return out;
}

Recommendation kurec(const PullRequest& pr, const Profile& dev, const Profile& rev,
                     const KuVector& pr_kus) {
  std::map<std::string, double> scores;
  for (const auto& [d, s] : kurec_scores(pr, dev, rev, pr_kus)) scores[d] = s.total();
  return {pr.id, RecommenderKind::kKurec, rank_scores(scores, pr.author)};
}

Recommendation recommend_cf(const PullRequest& pr, const std::vector<CommitRecord>& commits) {
  std::map<std::string, double> scores;
  for (const auto& c : commits) {
    if (c.authored_at < pr.opened_at) scores[c.author] += 1.0;
  }
  return {pr.id, RecommenderKind::kCf, rank_scores(scores, pr.author)};
}

Recommendation recommend_rf(const PullRequest& pr, const std::vector<PullRequest>& prior,
                            RfMode mode) {
  std::map<std::string, double> scores;
  for (const auto& p : prior) {
    if (p.opened_at >= pr.opened_at || p.id == pr.id) continue;
    if (mode == RfMode::kReviewedPrs) {
      for (const auto& r : p.reviewers) scores[r] += 1.0;
    } else {
      for (const auto& c : p.review_comments) {
        if (c.commented_at < pr.opened_at) scores[c.reviewer] += 1.0;
      }
    }
  }
  return {pr.id, RecommenderKind::kRf, rank_scores(scores, pr.author)};
}

Recommendation recommend_er(const PullRequest& pr, const std::vector<CommitRecord>& commits) {
  const std::set<std::string> files(pr.changed_files.begin(), pr.changed_files.end());
  std::map<std::string, double> scores;
  for (const auto& c : commits) {
    if (c.authored_at >= pr.opened_at) continue;
    const bool touches = std::any_of(c.changed_files.begin(), c.changed_files.end(),
                                     [&](const auto& f) { return files.count(f) > 0; });
    if (!touches) continue;
    const double t = static_cast<double>(c.authored_at.epoch_seconds());
    auto [it, inserted] = scores.emplace(c.author, t);
    if (!inserted) it->second = std::max(it->second, t);
  }
  return {pr.id, RecommenderKind::kEr, rank_scores(scores, pr.author)};
}

double chrev_xfactor(const ChrevFileStats& s) {
  const double c = s.total_comments == 0
                       ? 0.0
                       : static_cast<double>(s.comments) / static_cast<double>(s.total_comments);
  const double w = s.total_workdays == 0
                       ? 0.0
                       : static_cast<double>(s.workdays) / static_cast<double>(s.total_workdays);
  const std::int64_t gap = std::abs(s.last_day - s.total_last_day);
  return c + w + (gap > 0 ? 1.0 / static_cast<double>(gap) : 1.0);
}

std::map<std::string, ChrevFileStats> chrev_file_stats(const PullRequest& pr,
                                                       const std::vector<PullRequest>& prior,
                                                       const std::string& path) {
  std::map<std::string, std::set<std::int64_t>> days;
  std::map<std::string, std::size_t> counts;
  std::set<std::int64_t> all_days;
  std::size_t total = 0;
  for (const auto& p : prior) {
    if (p.opened_at >= pr.opened_at || p.id == pr.id) continue;
    for (const auto& c : p.review_comments) {
      if (!c.path || *c.path != path || c.commented_at >= pr.opened_at) continue;
      const auto day = c.commented_at.utc_day();
      days[c.reviewer].insert(day);
      ++counts[c.reviewer];
      all_days.insert(day);
      ++total;
    }
  }
  std::map<std::string, ChrevFileStats> out;
  for (const auto& [r, d] : days) {
    ChrevFileStats s;
    s.comments = counts[r];
    s.total_comments = total;
    s.workdays = d.size();
    s.total_workdays = all_days.size();
    s.last_day = *d.rbegin();
    s.total_last_day = *all_days.rbegin();
    out.emplace(r, s);
  }
  return out;
}

Recommendation recommend_chrev(const PullRequest& pr, const std::vector<PullRequest>& prior) {
  std::map<std::string, double> scores;
  for (const auto& f : pr.changed_files) {
    for (const auto& [r, s] : chrev_file_stats(pr, prior, f)) scores[r] += chrev_xfactor(s);
  }
  return {pr.id, RecommenderKind::kChrev, rank_scores(scores, pr.author)};
}

BaseRecommenders::BaseRecommenders(const KuStore& store, std::vector<PullRequest> history,
                                   RecommenderOptions options)
    : store_(store),
      history_(std::move(history)),
      options_(options),
      dev_builder_(store_),
      rev_builder_(history_, store_) {}

KuVector BaseRecommenders::pr_kus(const PullRequest& pr) const { return kurev::pr_kus(store_, pr); }

std::vector<PullRequest> BaseRecommenders::prior_prs(const PullRequest& pr) const {
  std::vector<PullRequest> out;
  for (const auto& p : history_) {
    if (p.opened_at < pr.opened_at && p.id != pr.id) out.push_back(p);
  }
  return out;
}

std::vector<CommitRecord> BaseRecommenders::prior_commits(const PullRequest& pr) const {
  std::vector<CommitRecord> out;
  for (const auto& c : store_.commits()) {
    if (c.authored_at < pr.opened_at) out.push_back(c);
  }
  return out;
}

Recommendation BaseRecommenders::recommend(RecommenderKind kind, const PullRequest& pr) {
  switch (kind) {
    case RecommenderKind::kKurec: {
      const KuVector v = pr_kus(pr);
      if (v.empty()) {
        throw NoKnowledgeUnitsError("PR " + std::to_string(pr.id) + " has no knowledge units");
      }
      return kurec(pr, dev_builder_.at(pr.opened_at), rev_builder_.at(pr.opened_at), v);
    }
    case RecommenderKind::kCf: return recommend_cf(pr, store_.commits());
    case RecommenderKind::kRf: return recommend_rf(pr, history_, options_.rf_mode);
    case RecommenderKind::kEr: return recommend_er(pr, store_.commits());
    case RecommenderKind::kChrev: return recommend_chrev(pr, history_);
    default:
      throw ContractViolation(std::string(recommender_name(kind)) + " is not a base recommender");
  }
}

}  // namespace kurev
