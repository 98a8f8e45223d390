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

#include "kurev/java/parser.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kurev/java/lexer.hpp"

namespace kurev::java {
namespace {

constexpr int kMaxDepth = 256;

struct SyntaxFailure {
  std::uint32_t offset;
  std::string message;
};

struct Modifiers {
  std::vector<NodeId> nodes;
  std::vector<std::string> words;
  bool empty() const { return nodes.empty(); }
  bool has(std::string_view w) const {
    return std::find(words.begin(), words.end(), w) != words.end();
  }
};

bool is_modifier_keyword(const Token& t) {
  if (t.kind != TokenKind::kKeyword) return false;
  const auto s = t.text;
  return s == "public" || s == "protected" || s == "private" ||
         s == "static" || s == "abstract" || s == "final" || s == "native" ||
         s == "synchronized" || s == "transient" || s == "volatile" ||
         s == "strictfp" || s == "default";
}

void add_keyword(SyntaxNode& n, std::string_view word) {
  if (!n.has_keyword(word)) n.keywords.emplace_back(word);
}

bool is_assign_operator(const Token& t) {
  return t.kind == TokenKind::kOperator && t.text.size() >= 2 &&
         t.text.back() == '=' && t.text != "==" && t.text != "!=" &&
         t.text != "<=";
}

bool starts_upper(std::string_view s) {
  return !s.empty() && s.front() >= 'A' && s.front() <= 'Z';
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, SyntaxTree& tree)
      : toks_(tokens), tree_(tree) {}

  void parse_compilation_unit() {
    const NodeId root = tree_.root();
    while (!at_end()) {
      const std::size_t start = pos_;
      try {
        parse_top_level_item(root);
      } catch (const SyntaxFailure& f) {
        attach_error(root, f);
        recover(start, /*consume_stray_close=*/true);
      }
    }
    tag_polymorphic_parameters();
  }

 private:
  // ---- token access -------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& la(std::size_t n) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  const Token& tok(std::size_t i) const {
    return toks_[std::min(i, toks_.size() - 1)];
  }
  bool at_end() const { return cur().kind == TokenKind::kEnd; }
  bool at(std::string_view s) const { return cur().is(s); }
  bool accept(std::string_view s) {
    if (at(s)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string_view expect_identifier() {
    if (!cur().is_identifier()) fail("expected identifier");
    return toks_[pos_++].text;
  }
  bool adjacent(std::size_t i) const {
    return tok(i).end == tok(i + 1).offset &&
           tok(i + 1).kind != TokenKind::kEnd;
  }

  [[noreturn]] void fail(std::string message) const {
    throw SyntaxFailure{cur().offset, std::move(message)};
  }

  NodeId make(NodeKind kind, const Token& at_tok) {
    return tree_.add(kind, at_tok.offset);
  }
  SyntaxNode& node(NodeId id) { return tree_.node(id); }
  void attach(NodeId parent, NodeId child) { tree_.attach(parent, child); }
  void attach_all(NodeId parent, const std::vector<NodeId>& kids) {
    for (NodeId k : kids) attach(parent, k);
  }

  void attach_error(NodeId parent, const SyntaxFailure& f) {
    const NodeId e = tree_.add(NodeKind::kError, f.offset);
    node(e).name = f.message;
    attach(parent, e);
  }

  // Skips to just after the next ';' or to the next unmatched '}' at the
  // current nesting level, always consuming at least one token.
  void recover(std::size_t start, bool consume_stray_close) {
    int depth = 0;
    while (!at_end()) {
      if (at("{")) {
        ++depth;
      } else if (at("}")) {
        if (depth == 0) {
          if (consume_stray_close || pos_ == start) ++pos_;
          break;
        }
        --depth;
        if (depth == 0) {
          ++pos_;
          break;
        }
      } else if (at(";") && depth == 0) {
        ++pos_;
        break;
      }
      ++pos_;
    }
    if (pos_ == start && !at_end()) ++pos_;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) {
        --parser.depth_;
        parser.fail("nesting too deep");
      }
    }
    ~DepthGuard() { --parser.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    Parser& parser;
  };

  // ---- speculative scanning (no nodes) -----------------------------------

  std::optional<std::size_t> scan_balanced(std::size_t i, std::string_view open,
                                           std::string_view close) const {
    if (!tok(i).is(open)) return std::nullopt;
    int depth = 0;
    for (; tok(i).kind != TokenKind::kEnd; ++i) {
      if (tok(i).is(open)) ++depth;
      if (tok(i).is(close) && --depth == 0) return i + 1;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> scan_annotation(std::size_t i) const {
    if (!tok(i).is("@") || tok(i + 1).is("interface")) return std::nullopt;
    ++i;
    if (!tok(i).is_identifier()) return std::nullopt;
    ++i;
    while (tok(i).is(".") && tok(i + 1).is_identifier()) i += 2;
    if (tok(i).is("(")) return scan_balanced(i, "(", ")");
    return i;
  }

  std::optional<std::size_t> scan_type_arguments(std::size_t i) const {
    if (!tok(i).is("<")) return std::nullopt;
    int depth = 0;
    for (; tok(i).kind != TokenKind::kEnd; ++i) {
      const Token& t = tok(i);
      if (t.is("<")) {
        ++depth;
      } else if (t.is(">")) {
        if (--depth == 0) return i + 1;
      } else if (t.is("@")) {
        auto e = scan_annotation(i);
        if (!e) return std::nullopt;
        i = *e - 1;
      } else if (t.is_identifier() || t.is(".") || t.is(",") || t.is("?") ||
                 t.is("extends") || t.is("super") || t.is("&") ||
                 t.is("[") || t.is("]") ||
                 (t.kind == TokenKind::kKeyword && is_primitive_type(t.text))) {
        // part of a type argument list
      } else {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> scan_type(std::size_t i) const {
    while (tok(i).is("@")) {
      auto e = scan_annotation(i);
      if (!e) return std::nullopt;
      i = *e;
    }
    const Token& t = tok(i);
    if (t.kind == TokenKind::kKeyword && is_primitive_type(t.text)) {
      ++i;
    } else if (t.is_identifier()) {
      ++i;
      if (tok(i).is("<")) {
        auto e = scan_type_arguments(i);
        if (!e) return std::nullopt;
        i = *e;
      }
      while (tok(i).is(".")) {
        std::size_t j = i + 1;
        while (tok(j).is("@")) {
          auto e = scan_annotation(j);
          if (!e) return std::nullopt;
          j = *e;
        }
        if (!tok(j).is_identifier()) break;
        i = j + 1;
        if (tok(i).is("<")) {
          auto e = scan_type_arguments(i);
          if (!e) return std::nullopt;
          i = *e;
        }
      }
    } else {
      return std::nullopt;
    }
    while (true) {
      std::size_t j = i;
      while (tok(j).is("@")) {
        auto e = scan_annotation(j);
        if (!e) return std::nullopt;
        j = *e;
      }
      if (tok(j).is("[") && tok(j + 1).is("]")) {
        i = j + 2;
      } else {
        break;
      }
    }
    return i;
  }

  // Modifiers, a type and a name followed by a declarator continuation.
  bool is_local_variable_start(std::size_t i, bool allow_colon) const {
    while (true) {
      if (tok(i).is("final")) {
        ++i;
      } else if (tok(i).is("@")) {
        auto e = scan_annotation(i);
        if (!e) return false;
        i = *e;
      } else {
        break;
      }
    }
    auto e = scan_type(i);
    if (!e || !tok(*e).is_identifier()) return false;
    const Token& after = tok(*e + 1);
    return after.is("=") || after.is(";") || after.is(",") || after.is("[") ||
           (allow_colon && after.is(":"));
  }

  bool is_lambda_start() const {
    if (cur().is_identifier() && la(1).is("->")) return true;
    if (!at("(")) return false;
    auto close = scan_balanced(pos_, "(", ")");
    return close && tok(*close).is("->");
  }

  bool at_type_declaration_start() const {
    if (at("class") || at("interface") || at("enum")) return true;
    if (at("@") && la(1).is("interface")) return true;
    return cur().is_identifier("record") && la(1).is_identifier() &&
           (la(2).is("(") || la(2).is("<"));
  }

  // ---- top level ----------------------------------------------------------

  void parse_top_level_item(NodeId root) {
    if (accept(";")) return;
    if ((cur().is_identifier("module") || cur().is_identifier("open")) &&
        (la(1).is_identifier() || la(1).is_identifier("module"))) {
      skip_module_declaration();
      return;
    }
    if (at("import")) {
      attach(root, parse_import());
      return;
    }
    Modifiers mods = parse_modifiers(false);
    if (at("package")) {
      const NodeId n = make(NodeKind::kPackageDeclaration, cur());
      ++pos_;
      std::string name = parse_qualified_name();
      node(n).qualified = name;
      node(n).name = name;
      attach_all(n, mods.nodes);
      expect(";");
      tree_.set_package_name(std::move(name));
      attach(root, n);
      return;
    }
    if (at_type_declaration_start()) {
      attach(root, parse_type_declaration(std::move(mods), "top_level"));
      return;
    }
    fail("expected type declaration");
  }

  void skip_module_declaration() {
    while (!at_end() && !at("{")) ++pos_;
    auto close = scan_balanced(pos_, "{", "}");
    pos_ = close ? *close : toks_.size() - 1;
  }

  std::string parse_qualified_name() {
    std::string name(expect_identifier());
    while (at(".") && la(1).is_identifier()) {
      ++pos_;
      name += '.';
      name += toks_[pos_++].text;
    }
    return name;
  }

  NodeId parse_import() {
    const NodeId n = make(NodeKind::kImportDeclaration, cur());
    expect("import");
    ImportEntry entry;
    if (accept("static")) {
      entry.is_static = true;
      add_keyword(node(n), "static");
    }
    entry.path = parse_qualified_name();
    if (at(".") && la(1).is("*")) {
      pos_ += 2;
      entry.is_wildcard = true;
      add_keyword(node(n), "wildcard");
    }
    expect(";");
    const auto dot = entry.path.rfind('.');
    node(n).name = entry.is_wildcard
                       ? "*"
                       : (dot == std::string::npos ? entry.path
                                                   : entry.path.substr(dot + 1));
    node(n).qualified = entry.path;
    tree_.add_import(std::move(entry));
    return n;
  }

  // ---- modifiers and annotations -----------------------------------------

  Modifiers parse_modifiers(bool allow_default) {
    Modifiers mods;
    while (true) {
      const Token& t = cur();
      if (t.is("@") && !la(1).is("interface")) {
        mods.nodes.push_back(parse_annotation());
        continue;
      }
      if (is_modifier_keyword(t)) {
        if (t.is("default") && (!allow_default || la(1).is(":") ||
                                la(1).is("->"))) {
          break;
        }
        mods.nodes.push_back(make_modifier(t, std::string(t.text)));
        mods.words.emplace_back(t.text);
        ++pos_;
        continue;
      }
      if (t.is_identifier("sealed") &&
          (la(1).is("class") || la(1).is("interface") ||
           is_modifier_keyword(la(1)))) {
        mods.nodes.push_back(make_modifier(t, "sealed"));
        mods.words.emplace_back("sealed");
        ++pos_;
        continue;
      }
      if (t.is_identifier("non") && la(1).is("-") &&
          la(2).is_identifier("sealed") && adjacent(pos_) &&
          adjacent(pos_ + 1)) {
        mods.nodes.push_back(make_modifier(t, "non-sealed"));
        mods.words.emplace_back("non-sealed");
        pos_ += 3;
        continue;
      }
      break;
    }
    return mods;
  }

  NodeId make_modifier(const Token& t, std::string word) {
    const NodeId n = make(NodeKind::kModifier, t);
    node(n).name = std::move(word);
    return n;
  }

  NodeId parse_annotation() {
    const NodeId n = make(NodeKind::kAnnotation, cur());
    expect("@");
    std::string q = parse_qualified_name();
    const auto dot = q.rfind('.');
    node(n).name = dot == std::string::npos ? q : q.substr(dot + 1);
    node(n).qualified = std::move(q);
    if (accept("(")) {
      if (!at(")")) {
        if (cur().is_identifier() && la(1).is("=")) {
          do {
            expect_identifier();
            expect("=");
            attach(n, parse_element_value());
          } while (accept(","));
        } else {
          attach(n, parse_element_value());
        }
      }
      expect(")");
    }
    return n;
  }

  NodeId parse_element_value() {
    if (at("@")) return parse_annotation();
    if (at("{")) {
      const NodeId n = make(NodeKind::kArrayInitializer, cur());
      ++pos_;
      while (!at("}")) {
        attach(n, parse_element_value());
        if (!accept(",")) break;
      }
      expect("}");
      return n;
    }
    return parse_conditional();
  }

  // ---- types --------------------------------------------------------------

  // Parses a type; `void` is accepted only when allow_void is set and then
  // yields nullopt.
  std::optional<NodeId> parse_result_type() {
    if (accept("void")) return std::nullopt;
    return parse_type();
  }

  NodeId parse_type(bool allow_diamond = false) {
    std::vector<NodeId> annotations;
    while (at("@") && !la(1).is("interface")) annotations.push_back(parse_annotation());
    const NodeId n = make(NodeKind::kTypeReference, cur());
    attach_all(n, annotations);
    const Token& t = cur();
    if (t.kind == TokenKind::kKeyword && is_primitive_type(t.text)) {
      node(n).name = std::string(t.text);
      node(n).qualified = node(n).name;
      add_keyword(node(n), "primitive");
      ++pos_;
    } else if (t.is_identifier()) {
      std::string qualified(t.text);
      std::string last(t.text);
      ++pos_;
      bool generic = false;
      if (at("<")) generic |= parse_type_arguments(n, allow_diamond);
      while (at(".") && (la(1).is_identifier() || la(1).is("@"))) {
        std::size_t save = pos_;
        ++pos_;
        while (at("@")) attach(n, parse_annotation());
        if (!cur().is_identifier()) {
          pos_ = save;
          break;
        }
        last = std::string(cur().text);
        qualified += '.';
        qualified += last;
        ++pos_;
        if (at("<")) generic |= parse_type_arguments(n, allow_diamond);
      }
      node(n).name = last;
      node(n).qualified = qualified;
      add_keyword(node(n), "reference");
      if (generic) add_keyword(node(n), "generic");
      if (last == "var" && qualified == "var") add_keyword(node(n), "var");
    } else {
      fail("expected type");
    }
    int dims = 0;
    while (true) {
      std::size_t save = pos_;
      while (at("@") && !la(1).is("interface")) parse_annotation();
      if (at("[") && la(1).is("]")) {
        pos_ += 2;
        ++dims;
      } else {
        pos_ = save;
        break;
      }
    }
    if (dims > 0) add_keyword(node(n), "array");
    if (dims == 1) add_keyword(node(n), "single_dim");
    if (dims > 1) add_keyword(node(n), "multi_dim");
    return n;
  }

  // Returns true when real type arguments were present (false for "<>").
  bool parse_type_arguments(NodeId owner, bool allow_diamond) {
    expect("<");
    if (at(">")) {
      if (!allow_diamond) fail("unexpected '<>'");
      ++pos_;
      add_keyword(node(owner), "diamond");
      return false;
    }
    do {
      while (at("@")) parse_annotation();
      if (accept("?")) {
        if (accept("extends") || accept("super")) attach(owner, parse_type());
      } else {
        attach(owner, parse_type());
      }
    } while (accept(","));
    expect(">");
    return true;
  }

  void parse_type_parameters(NodeId owner) {
    expect("<");
    do {
      while (at("@")) parse_annotation();
      const NodeId tp = make(NodeKind::kTypeParameter, cur());
      node(tp).name = std::string(expect_identifier());
      if (accept("extends")) {
        do {
          attach(tp, parse_type());
        } while (accept("&"));
        add_keyword(node(tp), "bounded");
      }
      attach(owner, tp);
    } while (accept(","));
    expect(">");
  }

  std::vector<NodeId> parse_type_list() {
    std::vector<NodeId> out;
    do {
      out.push_back(parse_type());
    } while (accept(","));
    return out;
  }

  // ---- type declarations --------------------------------------------------

  NodeId parse_type_declaration(Modifiers mods, std::string_view context) {
    DepthGuard guard(*this);
    const Token& start = cur();
    NodeKind kind;
    if (accept("class")) {
      kind = NodeKind::kClassDeclaration;
    } else if (accept("interface")) {
      kind = NodeKind::kInterfaceDeclaration;
    } else if (accept("enum")) {
      kind = NodeKind::kEnumDeclaration;
    } else if (at("@")) {
      pos_ += 2;
      kind = NodeKind::kAnnotationTypeDeclaration;
    } else {
      ++pos_;  // "record"
      kind = NodeKind::kRecordDeclaration;
    }
    const NodeId n = make(kind, start);
    const std::string name(expect_identifier());
    node(n).name = name;
    node(n).qualified = name;
    node(n).keywords = mods.words;
    add_keyword(node(n), context);
    if (context != "top_level") add_keyword(node(n), "nested");
    attach_all(n, mods.nodes);
    if (at("<")) {
      parse_type_parameters(n);
      add_keyword(node(n), "generic");
    }
    if (kind == NodeKind::kRecordDeclaration) {
      expect("(");
      if (!at(")")) {
        do {
          const NodeId p = parse_parameter();
          add_keyword(node(p), "record_component");
          attach(n, p);
        } while (accept(","));
      }
      expect(")");
    }
    std::vector<std::string> supertypes;
    std::vector<std::string> interfaces;
    if (accept("extends")) {
      for (NodeId t : parse_type_list()) {
        attach(n, t);
        supertypes.push_back(node(t).name);
      }
      add_keyword(node(n), "extends");
      if (!supertypes.empty()) node(n).type_name = supertypes.front();
    }
    if (accept("implements")) {
      for (NodeId t : parse_type_list()) {
        attach(n, t);
        interfaces.push_back(node(t).name);
      }
      add_keyword(node(n), "implements");
    }
    if (cur().is_identifier("permits")) {
      ++pos_;
      attach_all(n, parse_type_list());
    }
    if (kind == NodeKind::kClassDeclaration) {
      for (const auto& s : supertypes) {
        if (s == "Throwable" || (s.size() > 9 && s.ends_with("Exception")) ||
            s == "Exception" || s == "RuntimeException" ||
            (s.size() > 5 && s.ends_with("Error"))) {
          add_keyword(node(n), "extends_exception");
        }
      }
    }
    for (const auto& s : kind == NodeKind::kInterfaceDeclaration ? supertypes
                                                                 : interfaces) {
      if (s == "AutoCloseable" || s == "Closeable") {
        add_keyword(node(n), "implements_autocloseable");
      }
    }
    if (kind == NodeKind::kEnumDeclaration) {
      parse_enum_body(n, name);
    } else {
      parse_class_body(n, name, kind);
    }
    return n;
  }

  void parse_class_body(NodeId owner, const std::string& class_name,
                        NodeKind owner_kind) {
    expect("{");
    parse_members_until_close(owner, class_name, owner_kind);
  }

  void parse_members_until_close(NodeId owner, const std::string& class_name,
                                 NodeKind owner_kind) {
    while (!at("}") && !at_end()) {
      const std::size_t start = pos_;
      try {
        parse_member(owner, class_name, owner_kind);
      } catch (const SyntaxFailure& f) {
        attach_error(owner, f);
        recover(start, false);
      }
    }
    if (!accept("}")) {
      attach_error(owner, SyntaxFailure{cur().offset, "missing '}'"});
    }
    analyze_members(owner, class_name);
  }

  void parse_enum_body(NodeId owner, const std::string& name) {
    expect("{");
    while (!at(";") && !at("}") && !at_end()) {
      std::vector<NodeId> annotations;
      while (at("@")) annotations.push_back(parse_annotation());
      const NodeId c = make(NodeKind::kEnumConstant, cur());
      node(c).name = std::string(expect_identifier());
      attach_all(c, annotations);
      if (at("(")) parse_arguments(c);
      if (at("{")) {
        const NodeId body = make(NodeKind::kAnonymousClass, cur());
        node(body).name = name;
        add_keyword(node(body), "nested");
        parse_class_body(body, name, NodeKind::kAnonymousClass);
        attach(c, body);
      }
      attach(owner, c);
      if (!accept(",")) break;
    }
    if (accept(";")) {
      parse_members_until_close(owner, name, NodeKind::kEnumDeclaration);
      return;
    }
    if (!accept("}")) {
      attach_error(owner, SyntaxFailure{cur().offset, "missing '}'"});
    }
    analyze_members(owner, name);
  }

  void parse_member(NodeId owner, const std::string& class_name,
                    NodeKind owner_kind) {
    if (accept(";")) return;
    if (at("{") || (at("static") && la(1).is("{"))) {
      const NodeId init = make(NodeKind::kInitializer, cur());
      if (accept("static")) add_keyword(node(init), "static");
      attach(init, parse_block());
      attach(owner, init);
      return;
    }
    Modifiers mods = parse_modifiers(true);
    if (at_type_declaration_start()) {
      attach(owner, parse_type_declaration(std::move(mods), "member"));
      return;
    }
    std::vector<NodeId> type_params;
    if (at("<")) {
      const NodeId holder = tree_.add(NodeKind::kError, cur().offset);
      parse_type_parameters(holder);
      type_params = node(holder).children;
    }
    if (cur().is_identifier() && la(1).is("(")) {
      attach(owner, parse_constructor(std::move(mods), type_params));
      return;
    }
    if (owner_kind == NodeKind::kRecordDeclaration &&
        cur().is_identifier(class_name) && la(1).is("{")) {
      const NodeId ctor = make(NodeKind::kConstructorDeclaration, cur());
      node(ctor).name = class_name;
      node(ctor).keywords = mods.words;
      add_keyword(node(ctor), "compact");
      attach_all(ctor, mods.nodes);
      ++pos_;
      attach(ctor, parse_block());
      attach(owner, ctor);
      return;
    }
    const Token& type_tok = cur();
    std::optional<NodeId> type = parse_result_type();
    if (cur().is_identifier() && la(1).is("(")) {
      attach(owner, parse_method(std::move(mods), type_params, type, type_tok));
      return;
    }
    if (!type) fail("expected method declaration");
    attach(owner, parse_field(std::move(mods), *type, type_tok,
                              NodeKind::kFieldDeclaration));
  }

  // Formal parameter list; returns (count, varargs).
  std::pair<int, bool> parse_formal_parameters(NodeId owner) {
    expect("(");
    int count = 0;
    bool varargs = false;
    if (!at(")")) {
      do {
        // Receiver parameter: "Type this"
        if (auto e = scan_type(pos_); e && tok(*e).is("this")) {
          pos_ = *e + 1;
          continue;
        }
        const NodeId p = parse_parameter();
        varargs |= node(p).has_keyword("varargs");
        attach(owner, p);
        ++count;
      } while (accept(","));
    }
    expect(")");
    return {count, varargs};
  }

  NodeId parse_parameter() {
    Modifiers mods = parse_modifiers(false);
    const NodeId p = make(NodeKind::kParameter, cur());
    node(p).keywords = mods.words;
    attach_all(p, mods.nodes);
    const NodeId type = parse_type();
    attach(p, type);
    node(p).type_name = node(type).name;
    while (at("@")) attach(p, parse_annotation());
    if (accept("...")) add_keyword(node(p), "varargs");
    node(p).name = std::string(expect_identifier());
    while (at("[") && la(1).is("]")) pos_ += 2;
    return p;
  }

  void parse_throws(NodeId owner) {
    if (accept("throws")) {
      for (NodeId t : parse_type_list()) {
        add_keyword(node(t), "thrown");
        attach(owner, t);
      }
      add_keyword(node(owner), "throws");
    }
  }

  NodeId parse_constructor(Modifiers mods, const std::vector<NodeId>& type_params) {
    const NodeId n = make(NodeKind::kConstructorDeclaration, cur());
    node(n).name = std::string(expect_identifier());
    node(n).keywords = mods.words;
    attach_all(n, mods.nodes);
    attach_all(n, type_params);
    if (!type_params.empty()) add_keyword(node(n), "generic");
    auto [count, varargs] = parse_formal_parameters(n);
    if (count > 0) add_keyword(node(n), "has_params");
    if (varargs) add_keyword(node(n), "varargs");
    parse_throws(n);
    attach(n, parse_block());
    return n;
  }

  NodeId parse_method(Modifiers mods, const std::vector<NodeId>& type_params,
                      std::optional<NodeId> type, const Token& start) {
    const NodeId n = make(NodeKind::kMethodDeclaration, start);
    node(n).name = std::string(expect_identifier());
    node(n).keywords = mods.words;
    attach_all(n, mods.nodes);
    attach_all(n, type_params);
    if (!type_params.empty()) add_keyword(node(n), "generic");
    if (type) {
      attach(n, *type);
      node(n).type_name = node(*type).name;
      add_keyword(node(n), "returns_value");
    }
    auto [count, varargs] = parse_formal_parameters(n);
    if (count > 0) add_keyword(node(n), "has_params");
    if (varargs) add_keyword(node(n), "varargs");
    while (at("[") && la(1).is("]")) pos_ += 2;
    parse_throws(n);
    if (accept("default")) {
      attach(n, parse_element_value());
    }
    if (at("{")) {
      attach(n, parse_block());
    } else {
      expect(";");
      add_keyword(node(n), "no_body");
    }
    for (NodeId child : node(n).children) {
      if (node(child).kind == NodeKind::kAnnotation &&
          node(child).name == "Override") {
        add_keyword(node(n), "override");
      }
    }
    return n;
  }

  // Shared by fields and local variables; consumes the trailing ';' when
  // `terminator` is set.
  NodeId parse_field(Modifiers mods, NodeId type, const Token& start,
                     NodeKind kind, bool terminator = true) {
    const NodeId n = make(kind, start);
    node(n).keywords = mods.words;
    attach_all(n, mods.nodes);
    attach(n, type);
    const std::string declared = node(type).name;
    node(n).type_name = declared;
    if (node(type).has_keyword("var")) add_keyword(node(n), "var");
    bool first = true;
    do {
      const std::string_view name = expect_identifier();
      if (first) node(n).name = std::string(name);
      first = false;
      while (at("[") && la(1).is("]")) pos_ += 2;
      if (accept("=")) {
        add_keyword(node(n), "initialized");
        const NodeId init = parse_variable_initializer();
        attach(n, init);
        const SyntaxNode& in = node(init);
        if (in.kind == NodeKind::kObjectCreation && !in.name.empty() &&
            in.name != declared && declared != "var" &&
            !node(type).has_keyword("primitive")) {
          add_keyword(node(n), "polymorphic");
        }
      }
    } while (accept(","));
    if (terminator) expect(";");
    return n;
  }

  NodeId parse_variable_initializer() {
    if (at("{")) return parse_array_initializer();
    return parse_expression();
  }

  NodeId parse_array_initializer() {
    const NodeId n = make(NodeKind::kArrayInitializer, cur());
    expect("{");
    while (!at("}")) {
      attach(n, parse_variable_initializer());
      if (!accept(",")) break;
    }
    expect("}");
    return n;
  }

  // Structural tags over one type body's direct members.
  void analyze_members(NodeId owner, const std::string& class_name) {
    std::map<std::string, int> method_names;
    std::vector<NodeId> methods;
    std::vector<NodeId> ctors;
    std::vector<NodeId> fields;
    for (NodeId c : node(owner).children) {
      switch (node(c).kind) {
        case NodeKind::kMethodDeclaration:
          methods.push_back(c);
          ++method_names[node(c).name];
          break;
        case NodeKind::kConstructorDeclaration:
          ctors.push_back(c);
          break;
        case NodeKind::kFieldDeclaration:
          fields.push_back(c);
          break;
        default:
          break;
      }
    }
    for (NodeId m : methods) {
      SyntaxNode& mn = node(m);
      if (method_names[mn.name] > 1) add_keyword(mn, "overloaded");
      int params = 0;
      for (NodeId c : mn.children) {
        if (node(c).kind == NodeKind::kParameter) ++params;
      }
      const std::string& nm = mn.name;
      const bool returns = mn.has_keyword("returns_value");
      if (((nm.size() > 3 && nm.starts_with("get") && starts_upper(nm.substr(3))) ||
           (nm.size() > 2 && nm.starts_with("is") && starts_upper(nm.substr(2)))) &&
          params == 0 && returns) {
        add_keyword(mn, "getter");
      }
      if (nm.size() > 3 && nm.starts_with("set") && starts_upper(nm.substr(3)) &&
          params == 1) {
        add_keyword(mn, "setter");
      }
    }
    if (ctors.size() > 1) {
      for (NodeId c : ctors) add_keyword(node(c), "overloaded");
    }
    SyntaxNode& on = node(owner);
    if (on.kind != NodeKind::kClassDeclaration) return;
    bool any_instance_field = false;
    bool all_private_final = true;
    bool static_self_field = false;
    for (NodeId f : fields) {
      const SyntaxNode& fn = node(f);
      if (fn.has_keyword("static")) {
        if (fn.type_name == class_name) static_self_field = true;
        continue;
      }
      any_instance_field = true;
      if (!fn.has_keyword("private") || !fn.has_keyword("final")) {
        all_private_final = false;
      }
    }
    SyntaxNode& owner_node = node(owner);
    if (owner_node.has_keyword("final") && any_instance_field && all_private_final) {
      add_keyword(owner_node, "immutable");
    }
    const bool all_ctors_private =
        !ctors.empty() && std::all_of(ctors.begin(), ctors.end(), [&](NodeId c) {
          return node(c).has_keyword("private");
        });
    if (all_ctors_private && static_self_field) add_keyword(owner_node, "singleton");
  }

  void tag_polymorphic_parameters() {
    std::set<std::string> abstractions;
    for (std::size_t i = 0; i < tree_.node_count(); ++i) {
      const SyntaxNode& n = tree_.node(static_cast<NodeId>(i));
      if (n.kind == NodeKind::kInterfaceDeclaration ||
          (n.kind == NodeKind::kClassDeclaration && n.has_keyword("abstract"))) {
        abstractions.insert(n.name);
      }
    }
    if (abstractions.empty()) return;
    tree_.visit([&](NodeId id, const SyntaxNode& n) {
      if (n.kind == NodeKind::kParameter && abstractions.count(n.type_name)) {
        add_keyword(tree_.node(id), "polymorphic");
      }
    });
  }

  // ---- statements ---------------------------------------------------------

  NodeId parse_block() {
    DepthGuard guard(*this);
    const NodeId n = make(NodeKind::kBlock, cur());
    expect("{");
    while (!at("}") && !at_end()) {
      const std::size_t start = pos_;
      try {
        attach(n, parse_block_statement());
      } catch (const SyntaxFailure& f) {
        attach_error(n, f);
        recover(start, false);
      }
    }
    if (!accept("}")) attach_error(n, SyntaxFailure{cur().offset, "missing '}'"});
    return n;
  }

  NodeId parse_block_statement() {
    DepthGuard guard(*this);
    const Token& t = cur();
    if (t.is("{")) return parse_block();
    if (t.is(";")) {
      ++pos_;
      return make(NodeKind::kEmptyStatement, t);
    }
    if (t.kind == TokenKind::kKeyword) {
      const auto s = t.text;
      if (s == "if") return parse_if();
      if (s == "while") return parse_while();
      if (s == "do") return parse_do();
      if (s == "for") return parse_for();
      if (s == "try") return parse_try();
      if (s == "switch") {
        const NodeId n = parse_switch(NodeKind::kSwitchStatement);
        accept(";");
        return n;
      }
      if (s == "return") return parse_simple_with_expr(NodeKind::kReturnStatement);
      if (s == "throw") return parse_simple_with_expr(NodeKind::kThrowStatement);
      if (s == "break" || s == "continue") {
        const NodeId n = make(s == "break" ? NodeKind::kBreakStatement
                                           : NodeKind::kContinueStatement,
                              t);
        ++pos_;
        if (cur().is_identifier()) node(n).name = std::string(toks_[pos_++].text);
        expect(";");
        return n;
      }
      if (s == "synchronized" && la(1).is("(")) {
        const NodeId n = make(NodeKind::kSynchronizedStatement, t);
        ++pos_;
        expect("(");
        attach(n, parse_expression());
        expect(")");
        attach(n, parse_block());
        return n;
      }
      if (s == "assert") {
        const NodeId n = make(NodeKind::kAssertStatement, t);
        ++pos_;
        attach(n, parse_expression());
        if (accept(":")) attach(n, parse_expression());
        expect(";");
        return n;
      }
    }
    if (t.is_identifier("yield") && !la(1).is("=") && !la(1).is(".") &&
        !la(1).is("(") && !la(1).is("[") && !la(1).is("++") &&
        !la(1).is("--") && !la(1).is(";") && !is_assign_operator(la(1))) {
      const NodeId n = make(NodeKind::kYieldStatement, t);
      ++pos_;
      attach(n, parse_expression());
      expect(";");
      return n;
    }
    if (t.is_identifier() && la(1).is(":")) {
      const NodeId n = make(NodeKind::kLabeledStatement, t);
      node(n).name = std::string(t.text);
      pos_ += 2;
      attach(n, parse_block_statement());
      return n;
    }
    // Local type declarations and declarations carrying modifiers.
    if (t.is("@") || is_modifier_keyword(t) || at_type_declaration_start() ||
        t.is_identifier("sealed")) {
      const std::size_t save = pos_;
      Modifiers mods = parse_modifiers(false);
      if (at_type_declaration_start()) {
        return parse_type_declaration(std::move(mods), "local");
      }
      if (!mods.empty()) {
        const Token& type_tok = cur();
        const NodeId type = parse_type();
        return parse_field(std::move(mods), type, type_tok,
                           NodeKind::kLocalVariableDeclaration);
      }
      pos_ = save;
    }
    if (is_local_variable_start(pos_, false)) {
      const Token& type_tok = cur();
      const NodeId type = parse_type();
      return parse_field(Modifiers{}, type, type_tok,
                         NodeKind::kLocalVariableDeclaration);
    }
    const NodeId n = make(NodeKind::kExpressionStatement, t);
    attach(n, parse_expression());
    expect(";");
    return n;
  }

  NodeId parse_simple_with_expr(NodeKind kind) {
    const NodeId n = make(kind, cur());
    ++pos_;
    if (!at(";")) attach(n, parse_expression());
    expect(";");
    return n;
  }

  NodeId parse_paren_expression() {
    expect("(");
    const NodeId e = parse_expression();
    expect(")");
    return e;
  }

  NodeId parse_if() {
    const NodeId n = make(NodeKind::kIfStatement, cur());
    ++pos_;
    attach(n, parse_paren_expression());
    attach(n, parse_block_statement());
    if (accept("else")) {
      add_keyword(node(n), "has_else");
      attach(n, parse_block_statement());
    }
    return n;
  }

  NodeId parse_while() {
    const NodeId n = make(NodeKind::kWhileStatement, cur());
    ++pos_;
    attach(n, parse_paren_expression());
    attach(n, parse_block_statement());
    return n;
  }

  NodeId parse_do() {
    const NodeId n = make(NodeKind::kDoStatement, cur());
    ++pos_;
    attach(n, parse_block_statement());
    expect("while");
    attach(n, parse_paren_expression());
    expect(";");
    return n;
  }

  NodeId parse_for() {
    const Token& start = cur();
    ++pos_;
    expect("(");
    if (is_local_variable_start(pos_, true)) {
      // Could still be a classic loop: decide on the token after the name.
      const std::size_t save = pos_;
      Modifiers mods = parse_modifiers(false);
      const NodeId type = parse_type();
      if (cur().is_identifier() && la(1).is(":")) {
        const NodeId n = make(NodeKind::kEnhancedForStatement, start);
        // The loop variable is a declaration in its own right.
        const NodeId var = make(NodeKind::kLocalVariableDeclaration, tok(save));
        attach_all(var, mods.nodes);
        attach(var, type);
        node(var).name = std::string(cur().text);
        node(var).type_name = node(type).name;
        if (node(type).has_keyword("var")) add_keyword(node(var), "var");
        attach(n, var);
        node(n).name = node(var).name;
        node(n).type_name = node(var).type_name;
        pos_ += 2;
        attach(n, parse_expression());
        expect(")");
        attach(n, parse_block_statement());
        return n;
      }
      pos_ = save;
    }
    const NodeId n = make(NodeKind::kForStatement, start);
    if (!at(";")) {
      if (is_local_variable_start(pos_, false)) {
        Modifiers mods = parse_modifiers(false);
        const Token& type_tok = cur();
        const NodeId type = parse_type();
        attach(n, parse_field(std::move(mods), type, type_tok,
                              NodeKind::kLocalVariableDeclaration, false));
      } else {
        do {
          attach(n, parse_expression());
        } while (accept(","));
      }
    }
    expect(";");
    if (!at(";")) attach(n, parse_expression());
    expect(";");
    if (!at(")")) {
      do {
        attach(n, parse_expression());
      } while (accept(","));
    }
    expect(")");
    attach(n, parse_block_statement());
    return n;
  }

  NodeId parse_try() {
    const NodeId n = make(NodeKind::kTryStatement, cur());
    ++pos_;
    if (accept("(")) {
      add_keyword(node(n), "with_resources");
      while (!at(")")) {
        if (is_local_variable_start(pos_, false)) {
          Modifiers mods = parse_modifiers(false);
          const Token& type_tok = cur();
          const NodeId type = parse_type();
          const NodeId r = parse_field(std::move(mods), type, type_tok,
                                       NodeKind::kLocalVariableDeclaration, false);
          add_keyword(node(r), "resource");
          attach(n, r);
        } else {
          attach(n, parse_expression());
        }
        if (!accept(";")) break;
      }
      expect(")");
    }
    attach(n, parse_block());
    int catches = 0;
    while (at("catch")) {
      const NodeId c = make(NodeKind::kCatchClause, cur());
      ++pos_;
      expect("(");
      Modifiers mods = parse_modifiers(false);
      attach_all(c, mods.nodes);
      int types = 0;
      do {
        const NodeId t = parse_type();
        if (types == 0) node(c).type_name = node(t).name;
        attach(c, t);
        ++types;
      } while (accept("|"));
      if (types > 1) add_keyword(node(c), "multi");
      node(c).name = std::string(expect_identifier());
      expect(")");
      attach(c, parse_block());
      attach(n, c);
      ++catches;
    }
    if (catches > 0) add_keyword(node(n), "has_catch");
    if (catches > 1) add_keyword(node(n), "multiple_catch");
    if (at("finally")) {
      const NodeId f = make(NodeKind::kFinallyClause, cur());
      ++pos_;
      attach(f, parse_block());
      attach(n, f);
      add_keyword(node(n), "has_finally");
    }
    return n;
  }

  NodeId parse_switch(NodeKind kind) {
    DepthGuard guard(*this);
    const NodeId n = make(kind, cur());
    expect("switch");
    attach(n, parse_paren_expression());
    expect("{");
    NodeId current_case = n;
    while (!at("}") && !at_end()) {
      const std::size_t start = pos_;
      try {
        if (at("case") || at("default")) {
          const NodeId c = make(NodeKind::kSwitchCase, cur());
          if (accept("default")) {
            add_keyword(node(c), "default");
          } else {
            ++pos_;
            do {
              parse_case_label(c);
            } while (accept(","));
          }
          attach(n, c);
          if (accept("->")) {
            add_keyword(node(c), "arrow");
            add_keyword(node(n), "arrow");
            if (at("{")) {
              attach(c, parse_block());
            } else if (at("throw")) {
              attach(c, parse_simple_with_expr(NodeKind::kThrowStatement));
            } else {
              attach(c, parse_expression());
              expect(";");
            }
            current_case = n;
          } else {
            expect(":");
            current_case = c;
          }
        } else {
          attach(current_case, parse_block_statement());
        }
      } catch (const SyntaxFailure& f) {
        attach_error(current_case, f);
        recover(start, false);
      }
    }
    if (!accept("}")) attach_error(n, SyntaxFailure{cur().offset, "missing '}'"});
    return n;
  }

  void parse_case_label(NodeId c) {
    if (accept("default")) {
      add_keyword(node(c), "default");
      return;
    }
    // Type pattern: "case Type name" (optionally guarded with "when").
    if (auto e = scan_type(pos_); e && tok(*e).is_identifier() &&
                                  !tok(*e).is_identifier("when")) {
      const Token& after = tok(*e + 1);
      if (after.is("->") || after.is(":") || after.is(",") ||
          after.is_identifier("when") || after.is("&&")) {
        attach(c, parse_type());
        ++pos_;
        add_keyword(node(c), "pattern");
        if (cur().is_identifier("when")) {
          ++pos_;
          attach(c, parse_conditional());
        }
        return;
      }
    }
    attach(c, parse_conditional());
  }

  // ---- expressions --------------------------------------------------------

  struct OpMatch {
    std::string op;
    std::size_t tokens = 0;
    int precedence = 0;
  };

  std::optional<OpMatch> assignment_operator() const {
    const Token& t = cur();
    if (t.kind != TokenKind::kOperator) return std::nullopt;
    const auto s = t.text;
    if (s == "=" || s == "+=" || s == "-=" || s == "*=" || s == "/=" ||
        s == "%=" || s == "&=" || s == "|=" || s == "^=" || s == "<<=") {
      return OpMatch{std::string(s), 1, 0};
    }
    if (s == ">" && la(1).is(">") && adjacent(pos_)) {
      if (la(2).is("=") && adjacent(pos_ + 1)) return OpMatch{">>=", 3, 0};
      if (la(2).is(">") && adjacent(pos_ + 1) && la(3).is("=") &&
          adjacent(pos_ + 2)) {
        return OpMatch{">>>=", 4, 0};
      }
    }
    return std::nullopt;
  }

  std::optional<OpMatch> binary_operator() const {
    const Token& t = cur();
    if (t.is("instanceof")) return OpMatch{"instanceof", 1, 7};
    if (t.kind != TokenKind::kOperator) return std::nullopt;
    const auto s = t.text;
    if (s == ">") {
      if (la(1).is(">") && adjacent(pos_)) {
        if (la(2).is(">") && adjacent(pos_ + 1)) {
          if (la(3).is("=") && adjacent(pos_ + 2)) return std::nullopt;
          return OpMatch{">>>", 3, 8};
        }
        if (la(2).is("=") && adjacent(pos_ + 1)) return std::nullopt;
        return OpMatch{">>", 2, 8};
      }
      if (la(1).is("=") && adjacent(pos_)) return OpMatch{">=", 2, 7};
      return OpMatch{">", 1, 7};
    }
    static const std::map<std::string_view, int> kPrec = {
        {"||", 1}, {"&&", 2}, {"|", 3},  {"^", 4},  {"&", 5},
        {"==", 6}, {"!=", 6}, {"<", 7},  {"<=", 7}, {"<<", 8},
        {"+", 9},  {"-", 9},  {"*", 10}, {"/", 10}, {"%", 10},
    };
    auto it = kPrec.find(s);
    if (it == kPrec.end()) return std::nullopt;
    return OpMatch{std::string(s), 1, it->second};
  }

  NodeId parse_expression() {
    DepthGuard guard(*this);
    if (is_lambda_start()) return parse_lambda();
    const Token& start = cur();
    const NodeId lhs = parse_conditional();
    if (auto op = assignment_operator()) {
      const NodeId n = make(NodeKind::kAssignment, start);
      node(n).name = op->op;
      pos_ += op->tokens;
      attach(n, lhs);
      attach(n, parse_expression());
      return n;
    }
    return lhs;
  }

  NodeId parse_conditional() {
    const Token& start = cur();
    const NodeId cond = parse_binary(1);
    if (!at("?")) return cond;
    ++pos_;
    const NodeId n = make(NodeKind::kConditional, start);
    attach(n, cond);
    attach(n, parse_expression());
    expect(":");
    attach(n, is_lambda_start() ? parse_lambda() : parse_conditional());
    return n;
  }

  NodeId parse_binary(int min_prec) {
    DepthGuard guard(*this);
    const Token& start = cur();
    NodeId left = parse_unary();
    while (true) {
      auto op = binary_operator();
      if (!op || op->precedence < min_prec) break;
      if (op->op == "instanceof") {
        ++pos_;
        const NodeId n = make(NodeKind::kInstanceof, start);
        attach(n, left);
        accept("final");
        const NodeId type = parse_type();
        attach(n, type);
        node(n).type_name = node(type).name;
        if (at("(")) {
          auto close = scan_balanced(pos_, "(", ")");
          if (!close) fail("unbalanced record pattern");
          pos_ = *close;
          add_keyword(node(n), "pattern");
        }
        if (cur().is_identifier() && !la(1).is("(")) {
          ++pos_;
          add_keyword(node(n), "pattern");
        }
        left = n;
        continue;
      }
      pos_ += op->tokens;
      const NodeId right = parse_binary(op->precedence + 1);
      const NodeId n = make(NodeKind::kBinary, start);
      node(n).name = op->op;
      attach(n, left);
      attach(n, right);
      left = n;
    }
    return left;
  }

  bool cast_follows(std::size_t after_paren, bool primitive) const {
    const Token& next = tok(after_paren);
    if (primitive) return next.kind != TokenKind::kEnd && !next.is(")") &&
                          !next.is(";") && !next.is(",") && !next.is(".");
    if (next.is_identifier() || next.is_literal()) return true;
    if (next.is("(") || next.is("!") || next.is("~")) return true;
    if (next.kind == TokenKind::kKeyword) {
      const auto s = next.text;
      return s == "this" || s == "super" || s == "new" || s == "true" ||
             s == "false" || s == "null" || s == "switch" ||
             is_primitive_type(s);
    }
    return false;
  }

  NodeId parse_unary() {
    DepthGuard guard(*this);
    const Token& t = cur();
    if (t.is("+") || t.is("-") || t.is("++") || t.is("--") || t.is("!") ||
        t.is("~")) {
      const NodeId n = make(NodeKind::kUnary, t);
      node(n).name = std::string(t.text);
      ++pos_;
      attach(n, parse_unary());
      return n;
    }
    if (t.is("(")) {
      std::size_t i = pos_ + 1;
      auto e = scan_type(i);
      bool intersection = false;
      while (e && tok(*e).is("&")) {
        e = scan_type(*e + 1);
        intersection = true;
      }
      if (e && tok(*e).is(")")) {
        std::size_t first = i;
        while (tok(first).is("@")) first = scan_annotation(first).value_or(first + 1);
        const bool primitive = !intersection &&
                               tok(first).kind == TokenKind::kKeyword &&
                               is_primitive_type(tok(first).text) &&
                               *e == first + 1;
        if (cast_follows(*e + 1, primitive)) return parse_cast(primitive);
      }
    }
    return parse_postfix(parse_primary());
  }

  NodeId parse_cast(bool primitive) {
    const NodeId n = make(NodeKind::kCast, cur());
    expect("(");
    const NodeId type = parse_type();
    attach(n, type);
    node(n).type_name = node(type).name;
    node(n).name = node(type).name;
    while (accept("&")) attach(n, parse_type());
    expect(")");
    add_keyword(node(n), primitive ? "primitive" : "reference");
    attach(n, is_lambda_start() ? parse_lambda() : parse_unary());
    return n;
  }

  NodeId parse_lambda() {
    const NodeId n = make(NodeKind::kLambda, cur());
    if (cur().is_identifier()) {
      ++pos_;
    } else {
      expect("(");
      if (!at(")")) {
        do {
          if (cur().is_identifier() && (la(1).is(",") || la(1).is(")"))) {
            ++pos_;
            continue;
          }
          Modifiers mods = parse_modifiers(false);
          attach_all(n, mods.nodes);
          attach(n, parse_type());
          accept("...");
          expect_identifier();
          add_keyword(node(n), "typed_parameters");
        } while (accept(","));
      }
      expect(")");
    }
    expect("->");
    if (at("{")) {
      add_keyword(node(n), "block_body");
      attach(n, parse_block());
    } else {
      attach(n, parse_expression());
    }
    return n;
  }

  void parse_arguments(NodeId owner) {
    expect("(");
    if (!at(")")) {
      do {
        attach(owner, parse_expression());
      } while (accept(","));
    }
    expect(")");
  }

  static bool is_stream_source(const SyntaxNode& inv) {
    if (inv.kind != NodeKind::kMethodInvocation) return false;
    if (inv.has_keyword("stream_chain")) return true;
    const auto& nm = inv.name;
    if (nm == "stream" || nm == "parallelStream" || nm == "chars" ||
        nm == "codePoints") {
      return true;
    }
    const auto dot = inv.qualified.rfind('.');
    if (dot == std::string::npos) return false;
    const std::string_view qualifier = std::string_view(inv.qualified).substr(0, dot);
    const auto prev = qualifier.rfind('.');
    const std::string_view last =
        prev == std::string_view::npos ? qualifier : qualifier.substr(prev + 1);
    return last.ends_with("Stream");
  }

  std::string qualifier_text(NodeId expr) const {
    const SyntaxNode& e = tree_.node(expr);
    switch (e.kind) {
      case NodeKind::kName:
      case NodeKind::kThis:
      case NodeKind::kFieldAccess:
        return e.qualified;
      default:
        return {};
    }
  }

  NodeId make_invocation(NodeId receiver, const Token& name_tok) {
    const NodeId n = make(NodeKind::kMethodInvocation, name_tok);
    node(n).name = std::string(name_tok.text);
    const std::string q = qualifier_text(receiver);
    node(n).qualified = q.empty() ? node(n).name : q + "." + node(n).name;
    attach(n, receiver);
    if (is_stream_source(tree_.node(receiver))) add_keyword(node(n), "stream_chain");
    return n;
  }

  NodeId type_from_name(NodeId name_node) {
    const SyntaxNode& nm = tree_.node(name_node);
    const NodeId t = tree_.add(NodeKind::kTypeReference, nm.offset);
    node(t).name = tree_.node(name_node).name;
    node(t).qualified = tree_.node(name_node).qualified;
    add_keyword(node(t), "reference");
    return t;
  }

  NodeId finish_type_suffix(NodeId type) {
    // After a type in expression position: ".class" or "::".
    if (at(".") && la(1).is("class")) {
      const NodeId n = make(NodeKind::kClassLiteral, cur());
      pos_ += 2;
      node(n).name = node(type).name;
      node(n).qualified = node(type).qualified;
      attach(n, type);
      return n;
    }
    if (at("::")) return parse_method_reference(type);
    fail("expected '.class' or '::'");
  }

  NodeId parse_method_reference(NodeId receiver) {
    const NodeId n = make(NodeKind::kMethodReference, cur());
    expect("::");
    if (at("<")) parse_type_arguments(n, false);
    if (accept("new")) {
      node(n).name = "new";
    } else {
      node(n).name = std::string(expect_identifier());
    }
    const std::string q = qualifier_text(receiver);
    node(n).qualified = q.empty() ? node(n).name : q + "::" + node(n).name;
    attach(n, receiver);
    return n;
  }

  NodeId parse_primary() {
    DepthGuard guard(*this);
    const Token& t = cur();
    if (t.is_literal() || t.is("true") || t.is("false") || t.is("null")) {
      const NodeId n = make(NodeKind::kLiteral, t);
      node(n).name = std::string(t.text.substr(0, 64));
      switch (t.kind) {
        case TokenKind::kIntLiteral: add_keyword(node(n), "int"); break;
        case TokenKind::kFloatLiteral: add_keyword(node(n), "float"); break;
        case TokenKind::kCharLiteral: add_keyword(node(n), "char"); break;
        case TokenKind::kStringLiteral: add_keyword(node(n), "string"); break;
        case TokenKind::kTextBlock:
          add_keyword(node(n), "string");
          add_keyword(node(n), "text_block");
          break;
        default:
          add_keyword(node(n), t.is("null") ? "null" : "boolean");
      }
      ++pos_;
      return n;
    }
    if (t.is("this")) {
      if (la(1).is("(")) {
        const NodeId n = make(NodeKind::kConstructorInvocation, t);
        node(n).name = "this";
        ++pos_;
        parse_arguments(n);
        return n;
      }
      const NodeId n = make(NodeKind::kThis, t);
      node(n).name = "this";
      node(n).qualified = "this";
      ++pos_;
      return n;
    }
    if (t.is("super")) return parse_super(t);
    if (t.is("new")) return parse_creation(std::nullopt);
    if (t.is("(")) {
      const NodeId n = make(NodeKind::kParenthesized, t);
      ++pos_;
      attach(n, parse_expression());
      expect(")");
      return n;
    }
    if (t.is("switch")) return parse_switch(NodeKind::kSwitchExpression);
    if ((t.kind == TokenKind::kKeyword && is_primitive_type(t.text)) ||
        t.is("void")) {
      NodeId type;
      if (t.is("void")) {
        type = make(NodeKind::kTypeReference, t);
        node(type).name = "void";
        ++pos_;
      } else {
        type = parse_type();
      }
      return finish_type_suffix(type);
    }
    if (t.is_identifier()) {
      if (la(1).is("(")) {
        const NodeId n = make(NodeKind::kMethodInvocation, t);
        node(n).name = std::string(t.text);
        node(n).qualified = node(n).name;
        ++pos_;
        parse_arguments(n);
        return n;
      }
      if (la(1).is("<")) {
        if (auto e = scan_type(pos_); e && tok(*e).is("::")) {
          return parse_method_reference(parse_type());
        }
      }
      if (la(1).is("[") && la(2).is("]")) {
        return finish_type_suffix(parse_type());
      }
      const NodeId n = make(NodeKind::kName, t);
      node(n).name = std::string(t.text);
      node(n).qualified = node(n).name;
      ++pos_;
      return n;
    }
    fail("unexpected token '" + std::string(t.text) + "'");
  }

  NodeId parse_super(const Token& t) {
    if (la(1).is("(")) {
      const NodeId n = make(NodeKind::kSuperConstructorInvocation, t);
      node(n).name = "super";
      ++pos_;
      parse_arguments(n);
      return n;
    }
    ++pos_;
    if (at("::")) {
      const NodeId recv = make(NodeKind::kThis, t);
      node(recv).name = "super";
      return parse_method_reference(recv);
    }
    expect(".");
    if (at("<")) {
      const NodeId holder = tree_.add(NodeKind::kError, cur().offset);
      parse_type_arguments(holder, false);
    }
    const NodeId n = make(NodeKind::kSuperAccess, t);
    node(n).name = std::string(expect_identifier());
    node(n).qualified = "super." + node(n).name;
    if (at("(")) {
      add_keyword(node(n), "method");
      parse_arguments(n);
    } else {
      add_keyword(node(n), "field");
    }
    return n;
  }

  NodeId parse_creation(std::optional<NodeId> outer) {
    const Token& start = cur();
    expect("new");
    if (at("<")) {
      const NodeId holder = tree_.add(NodeKind::kError, cur().offset);
      parse_type_arguments(holder, false);
    }
    while (at("@")) parse_annotation();
    const Token& type_tok = cur();
    NodeId type;
    if (type_tok.kind == TokenKind::kKeyword && is_primitive_type(type_tok.text)) {
      type = make(NodeKind::kTypeReference, type_tok);
      node(type).name = std::string(type_tok.text);
      node(type).qualified = node(type).name;
      add_keyword(node(type), "primitive");
      ++pos_;
    } else {
      type = parse_class_type_for_creation();
    }
    if (at("[") || at("@")) {
      const NodeId n = make(NodeKind::kArrayCreation, start);
      node(n).name = node(type).name;
      node(n).qualified = node(type).qualified;
      attach(n, type);
      int dims = 0;
      while (true) {
        while (at("@")) parse_annotation();
        if (!at("[")) break;
        ++pos_;
        if (!at("]")) attach(n, parse_expression());
        expect("]");
        ++dims;
      }
      add_keyword(node(n), dims > 1 ? "multi_dim" : "single_dim");
      if (at("{")) {
        attach(n, parse_array_initializer());
        add_keyword(node(n), "initialized");
      }
      return n;
    }
    const NodeId n = make(NodeKind::kObjectCreation, start);
    node(n).name = node(type).name;
    node(n).qualified = node(type).qualified;
    if (node(type).has_keyword("generic")) add_keyword(node(n), "generic");
    if (node(type).has_keyword("diamond")) add_keyword(node(n), "diamond");
    if (outer) attach(n, *outer);
    attach(n, type);
    parse_arguments(n);
    if (at("{")) {
      add_keyword(node(n), "anonymous");
      const NodeId body = make(NodeKind::kAnonymousClass, cur());
      node(body).name = node(type).name;
      node(body).type_name = node(type).name;
      add_keyword(node(body), "nested");
      parse_class_body(body, node(type).name, NodeKind::kAnonymousClass);
      attach(n, body);
    }
    return n;
  }

  NodeId parse_class_type_for_creation() {
    const NodeId n = make(NodeKind::kTypeReference, cur());
    std::string qualified(expect_identifier());
    std::string last = qualified;
    bool generic = false;
    if (at("<")) generic |= parse_type_arguments(n, true);
    while (at(".") && la(1).is_identifier()) {
      ++pos_;
      last = std::string(cur().text);
      qualified += '.';
      qualified += last;
      ++pos_;
      if (at("<")) generic |= parse_type_arguments(n, true);
    }
    node(n).name = last;
    node(n).qualified = qualified;
    add_keyword(node(n), "reference");
    if (generic) add_keyword(node(n), "generic");
    return n;
  }

  NodeId parse_postfix(NodeId expr) {
    while (true) {
      if (at(".")) {
        const Token& next = la(1);
        if (next.is_identifier()) {
          if (la(2).is("(")) {
            pos_ += 1;
            const Token& name_tok = cur();
            ++pos_;
            const NodeId n = make_invocation(expr, name_tok);
            parse_arguments(n);
            expr = n;
            continue;
          }
          SyntaxNode& e = node(expr);
          if (e.kind == NodeKind::kName) {
            e.name = std::string(next.text);
            e.qualified += '.';
            e.qualified += next.text;
            pos_ += 2;
            continue;
          }
          const NodeId n = make(NodeKind::kFieldAccess, next);
          node(n).name = std::string(next.text);
          const std::string q = qualifier_text(expr);
          node(n).qualified = q.empty() ? node(n).name : q + "." + node(n).name;
          attach(n, expr);
          pos_ += 2;
          expr = n;
          continue;
        }
        if (next.is("<")) {
          ++pos_;
          const NodeId holder = tree_.add(NodeKind::kError, cur().offset);
          parse_type_arguments(holder, false);
          const Token& name_tok = cur();
          expect_identifier();
          const NodeId n = make_invocation(expr, name_tok);
          for (NodeId k : node(holder).children) attach(n, k);
          parse_arguments(n);
          expr = n;
          continue;
        }
        if (next.is("new")) {
          ++pos_;
          expr = parse_creation(expr);
          continue;
        }
        if (next.is("this")) {
          const NodeId n = make(NodeKind::kThis, next);
          node(n).name = "this";
          node(n).qualified = qualifier_text(expr) + ".this";
          pos_ += 2;
          expr = n;
          continue;
        }
        if (next.is("class")) {
          const NodeId type = node(expr).kind == NodeKind::kName
                                  ? type_from_name(expr)
                                  : expr;
          expr = finish_type_suffix(type);
          continue;
        }
        if (next.is("super")) {
          pos_ += 2;
          if (at("::")) {
            expr = parse_method_reference(expr);
            continue;
          }
          expect(".");
          const NodeId n = make(NodeKind::kSuperAccess, cur());
          node(n).name = std::string(expect_identifier());
          node(n).qualified = "super." + node(n).name;
          if (at("(")) {
            add_keyword(node(n), "method");
            parse_arguments(n);
          } else {
            add_keyword(node(n), "field");
          }
          expr = n;
          continue;
        }
        fail("unexpected token after '.'");
      }
      if (at("[")) {
        if (la(1).is("]") && node(expr).kind == NodeKind::kName) {
          const NodeId type = type_from_name(expr);
          int dims = 0;
          while (at("[") && la(1).is("]")) {
            pos_ += 2;
            ++dims;
          }
          add_keyword(node(type), "array");
          add_keyword(node(type), dims > 1 ? "multi_dim" : "single_dim");
          expr = finish_type_suffix(type);
          continue;
        }
        const NodeId n = make(NodeKind::kArrayAccess, cur());
        ++pos_;
        attach(n, expr);
        attach(n, parse_expression());
        expect("]");
        expr = n;
        continue;
      }
      if (at("::")) {
        expr = parse_method_reference(expr);
        continue;
      }
      if (at("++") || at("--")) {
        const NodeId n = make(NodeKind::kPostfix, cur());
        node(n).name = std::string(cur().text);
        ++pos_;
        attach(n, expr);
        expr = n;
        continue;
      }
      return expr;
    }
  }

  const std::vector<Token>& toks_;
  SyntaxTree& tree_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

SyntaxTree parse_java(std::string_view source) {
  check_is_source_text(source);
  LexResult lexed = lex(source);
  SyntaxTree tree;
  Parser parser(lexed.tokens, tree);
  parser.parse_compilation_unit();
  return tree;
}

}  // namespace kurev::java
