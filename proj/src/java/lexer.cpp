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

#include "kurev/java/lexer.hpp"

#include <algorithm>
#include <array>

#include "kurev/error.hpp"

namespace kurev::java {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",   "assert",       "boolean",   "break",      "byte",
    "case",       "catch",        "char",      "class",      "const",
    "continue",   "default",      "do",        "double",     "else",
    "enum",       "extends",      "final",     "finally",    "float",
    "for",        "goto",         "if",        "implements", "import",
    "instanceof", "int",          "interface", "long",       "native",
    "new",        "package",      "private",   "protected",  "public",
    "return",     "short",        "static",    "strictfp",   "super",
    "switch",     "synchronized", "this",      "throw",      "throws",
    "transient",  "try",          "void",      "volatile",   "while",
    "true",       "false",        "null",
};

// Longest first within each leading character.
constexpr std::array<std::string_view, 36> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "<<", "(",  ")",
    "{",   "}",   "[",  "]",  ";",  ",",  ".",  "@",  "=",  "<",  ">",
    "!",   "~",   "?",
};
constexpr std::string_view kSingleOps = ":+-*/&|^%";

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_hex(unsigned char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    LexResult out;
    if (src_.size() >= 3 && static_cast<unsigned char>(src_[0]) == 0xEF &&
        static_cast<unsigned char>(src_[1]) == 0xBB &&
        static_cast<unsigned char>(src_[2]) == 0xBF) {
      pos_ = 3;
    }
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      Token t = next();
      if (t.kind == TokenKind::kInvalid) ++out.invalid_tokens;
      out.tokens.push_back(t);
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.offset = end.end = static_cast<std::uint32_t>(src_.size());
    out.tokens.push_back(end);
    return out;
  }

 private:
  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size()
               ? static_cast<unsigned char>(src_[pos_ + ahead])
               : 0;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const unsigned char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
          c == 0x1A) {
        ++pos_;
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && peek(1) == '*') {
        const auto close = src_.find("*/", pos_ + 2);
        pos_ = close == std::string_view::npos ? src_.size() : close + 2;
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start) const {
    Token t;
    t.kind = kind;
    t.text = src_.substr(start, pos_ - start);
    t.offset = static_cast<std::uint32_t>(start);
    t.end = static_cast<std::uint32_t>(pos_);
    return t;
  }

  Token next() {
    const std::size_t start = pos_;
    const unsigned char c = peek();
    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_part(peek())) ++pos_;
      Token t = make(TokenKind::kIdentifier, start);
      if (is_java_keyword(t.text)) t.kind = TokenKind::kKeyword;
      return t;
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(start);
    if (c == '"') {
      if (peek(1) == '"' && peek(2) == '"') return text_block(start);
      return quoted(start, '"', TokenKind::kStringLiteral);
    }
    if (c == '\'') return quoted(start, '\'', TokenKind::kCharLiteral);
    for (auto op : kOperators) {
      if (src_.compare(pos_, op.size(), op) == 0) {
        pos_ += op.size();
        return make(TokenKind::kOperator, start);
      }
    }
    if (kSingleOps.find(static_cast<char>(c)) != std::string_view::npos) {
      ++pos_;
      return make(TokenKind::kOperator, start);
    }
    ++pos_;
    return make(TokenKind::kInvalid, start);
  }

  Token number(std::size_t start) {
    bool is_float = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      pos_ += 2;
      while (is_hex(peek()) || peek() == '_' || peek() == '.') {
        if (peek() == '.') is_float = true;
        ++pos_;
      }
      if (peek() == 'p' || peek() == 'P') {
        is_float = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (is_digit(peek())) ++pos_;
      }
    } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
      pos_ += 2;
      while (peek() == '0' || peek() == '1' || peek() == '_') ++pos_;
    } else {
      while (is_digit(peek()) || peek() == '_') ++pos_;
      if (peek() == '.' && is_digit(peek(1))) {
        is_float = true;
        ++pos_;
        while (is_digit(peek()) || peek() == '_') ++pos_;
      } else if (peek() == '.' && !is_ident_start(peek(1)) && peek(1) != '.') {
        // "1." is a valid double literal
        is_float = true;
        ++pos_;
      }
      if (peek() == 'e' || peek() == 'E') {
        is_float = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (is_digit(peek())) ++pos_;
      }
    }
    const unsigned char s = peek();
    if (s == 'f' || s == 'F' || s == 'd' || s == 'D') {
      is_float = true;
      ++pos_;
    } else if (s == 'l' || s == 'L') {
      ++pos_;
    }
    return make(is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral,
                start);
  }

  Token quoted(std::size_t start, char quote, TokenKind kind) {
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\') {
        pos_ += 2;
        continue;
      }
      if (c == '\n') break;  // unterminated literal: stop at end of line
      ++pos_;
      if (c == quote) return make(kind, start);
    }
    pos_ = std::min(pos_, src_.size());
    return make(TokenKind::kInvalid, start);
  }

  Token text_block(std::size_t start) {
    pos_ += 3;
    while (pos_ < src_.size()) {
      if (src_[pos_] == '\\') {
        pos_ += 2;
        continue;
      }
      if (src_.compare(pos_, 3, "\"\"\"") == 0) {
        pos_ += 3;
        return make(TokenKind::kTextBlock, start);
      }
      ++pos_;
    }
    pos_ = src_.size();
    return make(TokenKind::kInvalid, start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_primitive_type(std::string_view word) {
  return word == "int" || word == "long" || word == "short" ||
         word == "byte" || word == "char" || word == "boolean" ||
         word == "float" || word == "double";
}

void check_is_source_text(std::string_view source) {
  std::size_t i = 0;
  while (i < source.size()) {
    const auto c = static_cast<unsigned char>(source[i]);
    if (c < 0x80) {
      if (c == 0) throw ParseError(i, "NUL byte in source");
      if (c < 0x20 && c != '\t' && c != '\n' && c != '\r' && c != '\f' &&
          c != 0x1A) {
        throw ParseError(i, "control character in source");
      }
      if (c == 0x7F) throw ParseError(i, "control character in source");
      ++i;
      continue;
    }
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      throw ParseError(i, "malformed UTF-8");
    }
    if (i + len > source.size()) throw ParseError(i, "truncated UTF-8");
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(source[i + k]);
      if ((cc & 0xC0) != 0x80) throw ParseError(i, "malformed UTF-8");
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw ParseError(i, "malformed UTF-8");
    }
    i += len;
  }
}

LexResult lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace kurev::java
