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

#include "kurev/identity.hpp"

TEST(Identity, NormalizesWhitespaceAndCase) {
  EXPECT_EQ(kurev::normalize_identity("  Ada   Lovelace "), "ada lovelace");
  EXPECT_EQ(kurev::commit_identity("Ada Lovelace", "ADA@Example.org"),
            "ada lovelace <ada@example.org>");
}

TEST(Identity, AliasesFollowOneHop) {
  kurev::AliasMap m;
  m.add("Old Name <old@x.org>", "New Name <new@x.org>");
  EXPECT_EQ(m.resolve("old name <OLD@x.org>"), "new name <new@x.org>");
  EXPECT_EQ(m.resolve("someone <s@x.org>"), "someone <s@x.org>");
}
