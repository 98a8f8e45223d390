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

#include "fixtures.hpp"
#include "kurev/catalog.hpp"
#include "kurev/error.hpp"

using namespace kurev;

TEST(Catalog, BuiltinCoversEveryKu) {
  const auto& cat = builtin_catalog();
  EXPECT_EQ(cat.rules().size(), 93u);
  for (int k = 1; k <= kKuCount; ++k) {
    EXPECT_GE(cat.enabled_count(KuId::of(k)), 1u) << "K" << k;
  }
  EXPECT_EQ(cat.hash().size(), 64u);
}

TEST(Catalog, SerializationRoundTrips) {
  const auto& cat = builtin_catalog();
  const CapabilityCatalog again = parse_catalog(serialize_catalog(cat));
  EXPECT_EQ(again, cat);
  EXPECT_EQ(again.hash(), cat.hash());
}

TEST(Catalog, LabelsAreDottedPairs) {
  const auto* rule = builtin_catalog().find({KuId::of(11), 1});
  ASSERT_NE(rule, nullptr);
  EXPECT_EQ(capability_label(*rule), "K11.C1");
}

TEST(Catalog, OverlayReplacesWholeKu) {
  const CapabilityCatalog cat = parse_catalog(R"({
    "extends": "builtin",
    "rules": [{"ku": "K3", "capability": "C1", "patterns": [{"node_kind": "while_statement"}]}]
  })");
  EXPECT_EQ(cat.rules_for(KuId::of(3)).size(), 1u);
  EXPECT_EQ(cat.rules_for(KuId::of(1)).size(),
            builtin_catalog().rules_for(KuId::of(1)).size());
}

TEST(Catalog, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_catalog("{"), CatalogError);
  EXPECT_THROW(parse_catalog(R"({"rules": [{"ku": "K99", "capability": "C1",
      "patterns": [{"node_kind": "lambda"}]}]})"),
               CatalogError);
  EXPECT_THROW(parse_catalog(R"({"extends": "builtin", "rules": [{"ku": "K1", "capability": "C1",
      "patterns": [{"node_kind": "no_such_kind"}]}]})"),
               CatalogError);
  EXPECT_THROW(parse_catalog(R"({"extends": "builtin", "rules": [{"ku": "K1", "capability": "C1",
      "patterns": [{"node_kind": "lambda", "colour": "red"}]}]})"),
               CatalogError);
  EXPECT_THROW(parse_catalog(R"({"extends": "builtin", "rules": [
      {"ku": "K1", "capability": "C1", "patterns": [{"node_kind": "lambda"}]},
      {"ku": "K1", "capability": "C1", "patterns": [{"node_kind": "cast"}]}]})"),
               CatalogError);
  // Disabling the only rule of a KU without extending leaves other KUs empty.
  EXPECT_THROW(parse_catalog(R"({"rules": [{"ku": "K1", "capability": "C1",
      "patterns": [{"node_kind": "lambda"}]}]})"),
               CatalogError);
}

TEST(Catalog, LoadFromFile) {
  testing_support::TempDir dir;
  const auto path = dir.path() / "cat.json";
  testing_support::write_file(path, serialize_catalog(builtin_catalog()));
  EXPECT_EQ(load_catalog(path), builtin_catalog());
  EXPECT_EQ(load_catalog(std::nullopt), builtin_catalog());
  EXPECT_THROW(load_catalog(dir.path() / "missing.json"), SetupError);
}
