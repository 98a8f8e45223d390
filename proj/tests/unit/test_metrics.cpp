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

#include "kurev/error.hpp"
#include "kurev/metrics.hpp"
#include "oracle.hpp"

using namespace kurev;

TEST(Metrics, WorkedAveragePrecision) {
  const std::vector<std::string> ranked = {"a", "x", "b", "y", "c"};
  EXPECT_NEAR(average_precision(ranked, {"a", "b", "c"}, 5), (1.0 + 2.0 / 3.0 + 3.0 / 5.0) / 3.0,
              1e-12);
  EXPECT_NEAR(average_precision(ranked, {"a", "b", "c"}, 5), 0.7556, 1e-4);
}

TEST(Metrics, AveragePrecisionEdges) {
  EXPECT_EQ(average_precision({"x", "y"}, {"a"}, 2), 0.0);
  EXPECT_EQ(average_precision({}, {"a"}, 3), 0.0);
  EXPECT_EQ(average_precision({"a", "b"}, {"a", "b"}, 2), 1.0);
  EXPECT_DOUBLE_EQ(average_precision({"x", "a"}, {"a"}, 2), 0.5);
  EXPECT_EQ(average_precision({"x", "a"}, {"a"}, 1), 0.0);
  EXPECT_THROW(average_precision({"a"}, {"a"}, 0), ParameterError);
}

TEST(Metrics, TopKAccuracy) {
  EXPECT_TRUE(is_correct({"x", "a"}, {"a"}, 2));
  EXPECT_FALSE(is_correct({"x", "a"}, {"a"}, 1));
  const std::vector<std::vector<std::string>> r = {{"a"}, {"x", "b"}, {}, {"c"}};
  const std::vector<ReviewerSet> t = {{"a"}, {"b"}, {"c"}, {"z"}};
  EXPECT_DOUBLE_EQ(top_k_accuracy(r, t, 1), 0.25);
  EXPECT_DOUBLE_EQ(top_k_accuracy(r, t, 2), 0.5);
  EXPECT_DOUBLE_EQ(map_at_k(r, t, 2), (1.0 + 0.5) / 4.0);
  EXPECT_THROW(top_k_accuracy({}, {}, 1), ParameterError);
  EXPECT_THROW(top_k_accuracy(r, {{"a"}}, 1), ParameterError);
  EXPECT_THROW(map_at_k(r, t, 0), ParameterError);
}

TEST(Metrics, AgreesWithRecountOnRandomRankings) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g"};
  for (int round = 0; round < 500; ++round) {
    std::vector<std::string> p = pool;
    std::shuffle(p.begin(), p.end(), rng);
    const std::vector<std::string> ranked(p.begin(), p.begin() + static_cast<long>(rng() % 7));
    ReviewerSet truth;
    for (const auto& d : pool) {
      if (rng() % 3 == 0) truth.insert(d);
    }
    for (int k = 1; k <= 5; ++k) {
      EXPECT_NEAR(average_precision(ranked, truth, k), oracle::average_precision(ranked, truth, k),
                  1e-12);
      EXPECT_EQ(is_correct(ranked, truth, k), oracle::hit(ranked, truth, k));
    }
  }
}
