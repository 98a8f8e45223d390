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

#include "kurev/detector.hpp"

#include <algorithm>

#include "kurev/java/parser.hpp"

namespace kurev {

CapabilityHits detect_capabilities(const java::SyntaxTree& tree,
                                   const CapabilityCatalog& catalog) {
  CapabilityHits hits;
  std::vector<const CapabilityRule*> active;
  for (const auto& rule : catalog.rules()) {
    if (rule.enabled) active.push_back(&rule);
  }
  tree.visit([&](java::NodeId, const java::SyntaxNode& node) {
    for (const CapabilityRule* rule : active) {
      const bool hit = std::any_of(
          rule->patterns.begin(), rule->patterns.end(),
          [&](const AstPattern& p) { return pattern_matches(p, tree, node); });
      if (hit) ++hits[rule->id];
    }
  });
  return hits;
}

KuVector aggregate_hits(const CapabilityHits& hits) {
  KuVector v;
  for (const auto& [id, n] : hits) v[id.ku] += n;
  return v;
}

KuVector detect_kus(std::string_view source, const CapabilityCatalog& catalog) {
  return aggregate_hits(detect_capabilities(java::parse_java(source), catalog));
}

}  // namespace kurev
