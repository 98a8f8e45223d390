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

#include <string>

#include "kurev/error.hpp"
#include "kurev/java/lexer.hpp"

using namespace kurev::java;

TEST(Lexer, DropsCommentsAndWhitespace) {
  const auto r = lex("int /* c */ x = 1; // tail\n");
  ASSERT_EQ(r.tokens.size(), 6u);
  EXPECT_EQ(r.tokens[0].kind, TokenKind::kKeyword);
  EXPECT_TRUE(r.tokens[1].is_identifier("x"));
  EXPECT_TRUE(r.tokens[2].is("="));
  EXPECT_EQ(r.tokens[3].kind, TokenKind::kIntLiteral);
  EXPECT_EQ(r.tokens.back().kind, TokenKind::kEnd);
}

TEST(Lexer, SplitsClosingAngles) {
  const auto r = lex("Map<String, List<Integer>> m;");
  int closers = 0;
  for (const auto& t : r.tokens) closers += t.is(">");
  EXPECT_EQ(closers, 2);
}

TEST(Lexer, LiteralsAndTextBlocks) {
  const auto r = lex("s = \"a\\\"b\"; c = 'x'; d = 1.5e3f; t = \"\"\"\n  hi\n  \"\"\";");
  int strings = 0, chars = 0, floats = 0, blocks = 0;
  for (const auto& t : r.tokens) {
    strings += t.kind == TokenKind::kStringLiteral;
    chars += t.kind == TokenKind::kCharLiteral;
    floats += t.kind == TokenKind::kFloatLiteral;
    blocks += t.kind == TokenKind::kTextBlock;
  }
  EXPECT_EQ(strings, 1);
  EXPECT_EQ(chars, 1);
  EXPECT_EQ(floats, 1);
  EXPECT_EQ(blocks, 1);
}

TEST(Lexer, RejectsBinaryInput) {
  const std::string bytes("class A {\0}", 11);
  try {
    check_is_source_text(bytes);
    FAIL() << "expected a parse error";
  } catch (const kurev::ParseError& e) {
    EXPECT_EQ(e.offset(), 9u);
  }
  EXPECT_THROW(check_is_source_text("\xff\xfe"), kurev::ParseError);
  EXPECT_NO_THROW(check_is_source_text("class Caf\xc3\xa9 {}"));
}

TEST(Lexer, KeywordTables) {
  EXPECT_TRUE(is_java_keyword("synchronized"));
  EXPECT_FALSE(is_java_keyword("var"));
  EXPECT_TRUE(is_primitive_type("double"));
  EXPECT_FALSE(is_primitive_type("String"));
}
