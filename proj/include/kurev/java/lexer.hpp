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

#include <cstdint>
#include <string_view>
#include <vector>

namespace kurev::java {

enum class TokenKind : std::uint8_t {
  kIdentifier,
  kKeyword,
  kIntLiteral,
  kFloatLiteral,
  kCharLiteral,
  kStringLiteral,
  kTextBlock,
  kOperator,
  kInvalid,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string_view text;
  std::uint32_t offset = 0;
  std::uint32_t end = 0;

  bool is(std::string_view s) const {
    return (kind == TokenKind::kOperator || kind == TokenKind::kKeyword) &&
           text == s;
  }
  bool is_identifier() const { return kind == TokenKind::kIdentifier; }
  bool is_identifier(std::string_view s) const {
    return kind == TokenKind::kIdentifier && text == s;
  }
  bool is_literal() const {
    return kind == TokenKind::kIntLiteral || kind == TokenKind::kFloatLiteral ||
           kind == TokenKind::kCharLiteral || kind == TokenKind::kStringLiteral ||
           kind == TokenKind::kTextBlock;
  }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by a kEnd token
  std::uint32_t invalid_tokens = 0;
};

/// Rejects input that is not text: NUL bytes, malformed UTF-8 or stray C0
/// control characters. Throws ParseError with the first offending offset.
void check_is_source_text(std::string_view source);

/// Splits Java source into tokens. Comments and whitespace are dropped.
/// `>` is always emitted as a single-character token so that nested generic
/// closers need no splitting; the parser reassembles shift and comparison
/// operators from adjacent tokens.
LexResult lex(std::string_view source);

bool is_java_keyword(std::string_view word);
bool is_primitive_type(std::string_view word);

}  // namespace kurev::java
