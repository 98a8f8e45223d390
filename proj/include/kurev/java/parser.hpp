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

#include <string_view>

#include "kurev/java/syntax_tree.hpp"

namespace kurev::java {

/// Parses one Java compilation unit.
///
/// Parsing is best-effort: a localized syntax error becomes an `error` node
/// and the parser resynchronizes at the next statement or member boundary,
/// so the rest of the file still contributes nodes. Input that is not text
/// at all (NUL bytes, malformed UTF-8) throws ParseError with the offset.
///
/// Besides the raw syntax the parser attaches structural tags that need a
/// whole declaration in view, e.g. "overloaded" on methods sharing a name,
/// "immutable" and "singleton" on classes, "stream_chain" on invocations whose
/// receiver is a stream pipeline.
SyntaxTree parse_java(std::string_view source);

}  // namespace kurev::java
