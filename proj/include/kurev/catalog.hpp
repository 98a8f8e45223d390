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

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kurev/java/syntax_tree.hpp"
#include "kurev/ku.hpp"

namespace kurev {

struct CapabilityId {
  KuId ku;
  int cap_index;

  auto operator<=>(const CapabilityId&) const = default;
};

/// Node selector plus optional predicates. Empty predicate lists match
/// anything.
struct AstPattern {
  // Exactly one of kind/category is set.
  std::optional<java::NodeKind> kind;
  std::optional<java::NodeCategory> category;
  // Simple names ("Files"), dotted suffixes ("System.out.println") or
  // member wildcards ("Files.*").
  std::vector<std::string> names;
  std::vector<std::string> import_prefixes;
  std::string keyword;

  bool operator==(const AstPattern&) const = default;
};

struct CapabilityRule {
  CapabilityId id;
  std::string label;  // "C3", "S1"
  std::string description;
  std::vector<AstPattern> patterns;
  bool enabled = true;

  bool operator==(const CapabilityRule&) const = default;
};

/// Validated, immutable set of capability rules ordered by (ku, cap_index).
class CapabilityCatalog {
 public:
  explicit CapabilityCatalog(std::vector<CapabilityRule> rules);

  const std::vector<CapabilityRule>& rules() const { return rules_; }
  std::vector<const CapabilityRule*> rules_for(KuId ku) const;
  const CapabilityRule* find(CapabilityId id) const;
  std::size_t enabled_count(KuId ku) const;
  /// SHA-256 over the canonical serialization.
  const std::string& hash() const { return hash_; }

  bool operator==(const CapabilityCatalog& other) const {
    return rules_ == other.rules_;
  }

 private:
  std::vector<CapabilityRule> rules_;
  std::string hash_;
};

/// The catalog compiled into the binary.
const CapabilityCatalog& builtin_catalog();
std::string_view builtin_catalog_text();

/// Parses catalog JSON. A document with "extends": "builtin" replaces only the
/// KUs it mentions. `origin` is used in error messages.
CapabilityCatalog parse_catalog(std::string_view text,
                                std::string_view origin = "catalog");

/// Loads a catalog file, or the built-in one when `path` is empty.
CapabilityCatalog load_catalog(const std::optional<std::filesystem::path>& path);

/// Canonical JSON form; parse_catalog(serialize_catalog(c)) == c.
std::string serialize_catalog(const CapabilityCatalog& catalog);

/// Whether the pattern holds for one node of the tree.
bool pattern_matches(const AstPattern& pattern, const java::SyntaxTree& tree,
                     const java::SyntaxNode& node);

std::string capability_label(const CapabilityRule& rule);  // "K11.C1"

}  // namespace kurev
