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

#include <random>

#include "fixtures.hpp"
#include "kurev/combiner.hpp"
#include "kurev/error.hpp"
#include "kurev/log.hpp"
#include "oracle.hpp"

using namespace kurev;
using K = RecommenderKind;

namespace {

PrScores all_zero() {
  PrScores s;
  for (auto k : kBaseKinds) s[k] = PrScore{};
  return s;
}

PrScores with_perfect(K winner) {
  PrScores s = all_zero();
  s[winner].accuracy.fill(1.0);
  s[winner].precision.fill(1.0);
  return s;
}

}  // namespace

TEST(Combiner, VariantKinds) {
  EXPECT_EQ(combined_kind(BrstVariant::kFreq), K::kAdFreq);
  EXPECT_EQ(combined_kind(BrstVariant::kRec), K::kAdRec);
  EXPECT_EQ(combined_kind(BrstVariant::kHybrid), K::kAdHybrid);
}

TEST(Combiner, FirstPickIsSeededDraw) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 99991ULL}) {
    std::mt19937_64 a(seed);
    std::mt19937_64 b(seed);
    const K expected = kBaseKinds[b() % 5];
    EXPECT_EQ(Brst(BrstVariant::kFreq).choose(a), expected);
  }
}

TEST(Combiner, NonEmptyBrstDoesNotDraw) {
  Brst brst(BrstVariant::kRec);
  brst.record(K::kEr);
  std::mt19937_64 rng(3);
  const std::mt19937_64 before = rng;
  EXPECT_EQ(brst.choose(rng), K::kEr);
  EXPECT_EQ(rng, before);
}

TEST(Combiner, FrequencyAndHybridVariants) {
  Brst freq(BrstVariant::kFreq);
  Brst hybrid(BrstVariant::kHybrid);
  std::mt19937_64 rng(1);
  // CF wins 6 times early, then RF 5 times.
  for (int i = 0; i < 6; ++i) {
    freq.record(K::kCf);
    hybrid.record(K::kCf);
  }
  for (int i = 0; i < 5; ++i) {
    freq.record(K::kRf);
    hybrid.record(K::kRf);
  }
  EXPECT_EQ(freq.choose(rng), K::kCf);
  EXPECT_EQ(hybrid.window().size(), kHybridWindow);
  EXPECT_EQ(hybrid.choose(rng), K::kRf);  // 5 CF against 5 RF inside the window
}

TEST(Combiner, TiesFollowFixedOrder) {
  Brst freq(BrstVariant::kFreq);
  freq.record(K::kCf);
  freq.record(K::kChrev);
  std::mt19937_64 rng(1);
  EXPECT_EQ(freq.choose(rng), K::kChrev);
  PerformanceTable table;
  table.add(all_zero());
  EXPECT_EQ(table.best(), K::kKurec);
  EXPECT_THROW(PerformanceTable{}.best(), ContractViolation);
  EXPECT_THROW(Brst(BrstVariant::kFreq).record(K::kAdRec), ContractViolation);
}

TEST(Combiner, PerformanceTableIsCumulative) {
  PerformanceTable table;
  table.add(with_perfect(K::kEr));
  table.add(with_perfect(K::kCf));
  table.add(with_perfect(K::kCf));
  EXPECT_DOUBLE_EQ(table.combined(K::kCf), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(table.combined(K::kEr), 1.0 / 3.0);
  EXPECT_EQ(table.best(), K::kCf);
  EXPECT_EQ(best_performer({with_perfect(K::kEr), with_perfect(K::kCf)}), K::kEr);
  PrScores missing = all_zero();
  missing.erase(K::kRf);
  EXPECT_THROW(table.add(missing), ContractViolation);
}

TEST(Combiner, ScoreRankingMatchesMetrics) {
  const PrScore s = score_ranking({"x", "a", "y", "b"}, {"a", "b"});
  EXPECT_EQ(s.accuracy[0], 0.0);
  EXPECT_EQ(s.accuracy[1], 1.0);
  EXPECT_DOUBLE_EQ(s.precision[1], 0.5 / 1.0);
  EXPECT_DOUBLE_EQ(s.precision[3], (0.5 + 0.5) / 2.0);
}

TEST(Combiner, FallsBackToRfWithoutKnowledgeUnits) {
  // Find a seed whose first draw is KUREC.
  std::uint64_t seed = 0;
  while (std::mt19937_64(seed)() % 5 != 0) ++seed;
  PullRequest pr;
  pr.id = 7;
  pr.reviewers = {"r"};
  BaseResults base;
  for (auto k : kBaseKinds) base.recs[k] = Recommendation{pr.id, k, {}};
  base.recs[K::kRf].ranked = {{"r", 1.0}};
  base.kurec_unavailable = true;
  std::vector<std::string> logged;
  const auto old = set_log_sink([&](LogLevel, std::string_view m) { logged.emplace_back(m); });
  CombinerReplay replay(BrstVariant::kRec, seed);
  const CombinedStep step = replay.step(pr, base);
  set_log_sink(old);
  EXPECT_EQ(step.chosen, K::kKurec);
  EXPECT_EQ(step.used, K::kRf);
  EXPECT_EQ(step.recommendation.kind, K::kAdRec);
  EXPECT_EQ(step.recommendation.top(1), std::vector<std::string>{"r"});
  EXPECT_EQ(logged.size(), 1u);
  EXPECT_EQ(replay.brst().last_best(), K::kRf);
}

TEST(Combiner, ReplayMatchesBruteForce) {
  testing_support::TempDir dir;
  SynthSpec spec;
  spec.prs = 30;
  spec.commits = 60;
  spec.seed = 8;
  const auto syn = testing_support::make_synth_store(spec, dir.path());
  BaseRecommenders base(syn.store, syn.prs.prs);
  for (auto variant : kBrstVariants) {
    CombinerReplay replay(variant, 17);
    std::vector<std::vector<std::vector<std::string>>> rankings;
    std::vector<std::set<std::string>> truths;
    std::vector<std::size_t> bests;
    for (const auto& pr : syn.prs.prs) {
      const BaseResults results = run_base_recommenders(base, pr);
      const CombinedStep step = replay.step(pr, results);

      std::size_t want;
      if (bests.empty()) {
        want = std::mt19937_64(17)() % 5;
      } else if (variant == BrstVariant::kRec) {
        want = bests.back();
      } else {
        const std::size_t from =
            variant == BrstVariant::kHybrid && bests.size() > kHybridWindow ? bests.size() - kHybridWindow : 0;
        std::array<int, 5> counts{};
        for (std::size_t i = from; i < bests.size(); ++i) ++counts[bests[i]];
        want = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
      }
      ASSERT_EQ(oracle::kKinds[want], recommender_name(step.chosen)) << "PR " << pr.id;
      if (step.chosen == K::kKurec && results.kurec_unavailable) {
        EXPECT_EQ(step.used, K::kRf);
      } else {
        EXPECT_EQ(step.used, step.chosen);
      }
      EXPECT_LE(replay.brst().window().size(), kHybridWindow);

      std::vector<std::vector<std::string>> row;
      for (const auto& name : oracle::kKinds) {
        row.push_back(results.recs.at(*parse_recommender(name)).top(5));
      }
      rankings.push_back(row);
      truths.emplace_back(pr.reviewers.begin(), pr.reviewers.end());
      bests.push_back(oracle::best_performer(rankings, truths));
    }
  }
}
