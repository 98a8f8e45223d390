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

#include "kurev/identity.hpp"

#include <cctype>

namespace kurev {

std::string normalize_identity(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(uc)));
  }
  return out;
}

std::string commit_identity(std::string_view name, std::string_view email) {
  std::string joined(name);
  joined += " <";
  joined += email;
  joined += '>';
  return normalize_identity(joined);
}

void AliasMap::add(std::string_view alias, std::string_view canonical) {
  aliases_[normalize_identity(alias)] = normalize_identity(canonical);
}

std::string AliasMap::resolve(std::string_view raw) const {
  std::string id = normalize_identity(raw);
  auto it = aliases_.find(id);
  return it == aliases_.end() ? id : it->second;
}

}  // namespace kurev
