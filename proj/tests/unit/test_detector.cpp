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

#include <json.hpp>

#include "fixtures.hpp"
#include "kurev/catalog.hpp"
#include "kurev/detector.hpp"
#include "kurev/java/parser.hpp"

using namespace kurev;

namespace {

std::map<std::string, std::uint64_t> labelled(const CapabilityHits& hits) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& [id, n] : hits) {
    if (n == 0) continue;
    out[id.ku.label() + "." + builtin_catalog().find(id)->label] = n;
  }
  return out;
}

CapabilityHits hits_for(std::string_view src) {
  return detect_capabilities(java::parse_java(src), builtin_catalog());
}

}  // namespace

TEST(Detector, SpotFilesMatchHandCounts) {
  const auto dir = testing_support::fixture_dir() / "spot";
  const auto expected =
      nlohmann::json::parse(testing_support::read_file(dir / "expected.json"));
  ASSERT_EQ(expected.size(), 10u);
  for (const auto& [file, caps] : expected.items()) {
    std::map<std::string, std::uint64_t> want;
    for (const auto& [label, n] : caps.items()) want[label] = n.get<std::uint64_t>();
    EXPECT_EQ(labelled(hits_for(testing_support::read_file(dir / file))), want) << file;
  }
}

TEST(Detector, EveryKuFixtureFiresItsKu) {
  const auto dir = testing_support::fixture_dir() / "ku";
  for (int k = 1; k <= kKuCount; ++k) {
    char name[16];
    std::snprintf(name, sizeof name, "K%02d.java", k);
    const KuVector v = detect_kus(testing_support::read_file(dir / name), builtin_catalog());
    EXPECT_GT(v[KuId::of(k)], 0u) << name;
  }
}

TEST(Detector, AggregationSumsCapabilities) {
  CapabilityHits hits;
  hits[{KuId::of(2), 1}] = 3;
  hits[{KuId::of(2), 4}] = 2;
  hits[{KuId::of(9), 1}] = 1;
  const KuVector v = aggregate_hits(hits);
  EXPECT_EQ(v[KuId::of(2)], 5u);
  EXPECT_EQ(v[KuId::of(9)], 1u);
  EXPECT_EQ(v.total(), 6u);
}

TEST(Detector, EmptyAndCommentOnlySources) {
  EXPECT_TRUE(detect_kus("", builtin_catalog()).empty());
  EXPECT_TRUE(detect_kus("// nothing\n/* here */", builtin_catalog()).empty());
}

TEST(Detector, VariableDeclarationsCountPerStatement) {
  const auto h = labelled(hits_for("class A { void f() { int a = 1, b; double c = (double) a; } }"));
  EXPECT_EQ(h.at("K1.C1"), 3u);  // two statements and one primitive cast
}

TEST(Detector, ImportGatedRules) {
  const std::string with = "import java.nio.file.Files;\nclass A { void f() throws Exception { Files.readString(null); } }";
  const std::string other =
      "import com.acme.Files;\nclass A { void f() { Files.readString(null); } }";
  const KuVector a = detect_kus(with, builtin_catalog());
  const KuVector b = detect_kus(other, builtin_catalog());
  EXPECT_EQ(a[KuId::of(14)], 1u);
  EXPECT_EQ(b[KuId::of(14)], 0u);
}

TEST(Detector, DisabledRulesDoNotFire) {
  const CapabilityCatalog cat = parse_catalog(R"({
    "extends": "builtin",
    "rules": [
      {"ku": "K9", "capability": "C1", "enabled": false},
      {"ku": "K9", "capability": "C2", "patterns": [{"node_kind": "method_reference"}]}
    ]
  })");
  const KuVector v = detect_kus("class A { Runnable r = () -> {}; }", cat);
  EXPECT_EQ(v[KuId::of(9)], 0u);
}
