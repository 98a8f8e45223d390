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

#include <set>

#include "kurev/error.hpp"
#include "kurev/ku.hpp"

using kurev::KuId;
using kurev::KuVector;

TEST(KuId, ExactlyTwentyEightValues) {
  std::set<int> seen;
  for (int i = 1; i <= kurev::kKuCount; ++i) seen.insert(KuId::of(i).index());
  EXPECT_EQ(seen.size(), 28u);
  EXPECT_THROW(KuId::of(0), kurev::ContractViolation);
  EXPECT_THROW(KuId::of(29), kurev::ContractViolation);
  EXPECT_FALSE(KuId::try_of(29).has_value());
}

TEST(KuId, ParsesLabels) {
  EXPECT_EQ(KuId::parse("K7"), KuId::of(7));
  EXPECT_EQ(KuId::parse("k28"), KuId::of(28));
  EXPECT_EQ(KuId::parse("3"), KuId::of(3));
  EXPECT_FALSE(KuId::parse("K0").has_value());
  EXPECT_FALSE(KuId::parse("K").has_value());
  EXPECT_EQ(KuId::of(11).label(), "K11");
  EXPECT_FALSE(KuId::of(11).title().empty());
}

TEST(KuVector, SumsAndCounts) {
  KuVector a;
  a[KuId::of(1)] = 2;
  a[KuId::of(28)] = 1;
  KuVector b;
  b[KuId::of(1)] = 3;
  a += b;
  EXPECT_EQ(a[KuId::of(1)], 5u);
  EXPECT_EQ(a.total(), 6u);
  EXPECT_EQ(a.present_count(), 2);
  EXPECT_TRUE(KuVector{}.empty());
}
