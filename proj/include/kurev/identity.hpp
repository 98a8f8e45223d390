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

#include <map>
#include <string>
#include <string_view>

namespace kurev {

/// Trims, collapses inner whitespace runs and case-folds (ASCII) an identity.
std::string normalize_identity(std::string_view raw);

/// Canonical identity of a commit author: "name <email>", normalized.
std::string commit_identity(std::string_view name, std::string_view email);

/// Optional alias table mapping alternative identities to one canonical form.
/// Keys and values are normalized on insertion; no fuzzy matching is done.
class AliasMap {
 public:
  AliasMap() = default;

  void add(std::string_view alias, std::string_view canonical);
  /// Normalizes `raw` and follows at most one alias hop.
  std::string resolve(std::string_view raw) const;
  bool empty() const { return aliases_.empty(); }
  const std::map<std::string, std::string>& entries() const { return aliases_; }

 private:
  std::map<std::string, std::string> aliases_;
};

}  // namespace kurev
