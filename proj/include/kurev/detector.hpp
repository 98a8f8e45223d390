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
#include <string_view>

#include "kurev/catalog.hpp"
#include "kurev/java/syntax_tree.hpp"
#include "kurev/ku.hpp"

namespace kurev {

/// Match count per capability; capabilities that never fired are absent.
using CapabilityHits = std::map<CapabilityId, std::uint64_t>;

/// Counts, for every enabled rule, the nodes matching at least one of its
/// patterns. A node may count towards several capabilities.
CapabilityHits detect_capabilities(const java::SyntaxTree& tree,
                                   const CapabilityCatalog& catalog);

KuVector aggregate_hits(const CapabilityHits& hits);

/// Parses and counts. Throws ParseError for input that is not Java text.
KuVector detect_kus(std::string_view source, const CapabilityCatalog& catalog);

}  // namespace kurev
