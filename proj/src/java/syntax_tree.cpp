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

#include "kurev/java/syntax_tree.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace kurev::java {
namespace {

struct KindInfo {
  std::string_view name;
  NodeCategory category;
};

constexpr std::array<KindInfo, kNodeKindCount> kKinds = {{
    {"compilation_unit", NodeCategory::kDeclaration},
    {"package_declaration", NodeCategory::kDeclaration},
    {"import_declaration", NodeCategory::kDeclaration},
    {"class_declaration", NodeCategory::kDeclaration},
    {"interface_declaration", NodeCategory::kDeclaration},
    {"enum_declaration", NodeCategory::kDeclaration},
    {"record_declaration", NodeCategory::kDeclaration},
    {"annotation_type_declaration", NodeCategory::kDeclaration},
    {"anonymous_class", NodeCategory::kDeclaration},
    {"method_declaration", NodeCategory::kDeclaration},
    {"constructor_declaration", NodeCategory::kDeclaration},
    {"field_declaration", NodeCategory::kDeclaration},
    {"local_variable_declaration", NodeCategory::kDeclaration},
    {"parameter", NodeCategory::kDeclaration},
    {"initializer", NodeCategory::kDeclaration},
    {"enum_constant", NodeCategory::kDeclaration},
    {"type_parameter", NodeCategory::kDeclaration},
    {"modifier", NodeCategory::kDeclaration},
    {"block", NodeCategory::kStatement},
    {"if_statement", NodeCategory::kStatement},
    {"switch_statement", NodeCategory::kStatement},
    {"switch_case", NodeCategory::kStatement},
    {"while_statement", NodeCategory::kStatement},
    {"do_statement", NodeCategory::kStatement},
    {"for_statement", NodeCategory::kStatement},
    {"enhanced_for_statement", NodeCategory::kStatement},
    {"break_statement", NodeCategory::kStatement},
    {"continue_statement", NodeCategory::kStatement},
    {"return_statement", NodeCategory::kStatement},
    {"throw_statement", NodeCategory::kStatement},
    {"try_statement", NodeCategory::kStatement},
    {"catch_clause", NodeCategory::kStatement},
    {"finally_clause", NodeCategory::kStatement},
    {"synchronized_statement", NodeCategory::kStatement},
    {"assert_statement", NodeCategory::kStatement},
    {"yield_statement", NodeCategory::kStatement},
    {"labeled_statement", NodeCategory::kStatement},
    {"expression_statement", NodeCategory::kStatement},
    {"empty_statement", NodeCategory::kStatement},
    {"method_invocation", NodeCategory::kInvocation},
    {"constructor_invocation", NodeCategory::kInvocation},
    {"super_constructor_invocation", NodeCategory::kInvocation},
    {"switch_expression", NodeCategory::kExpression},
    {"object_creation", NodeCategory::kExpression},
    {"array_creation", NodeCategory::kExpression},
    {"array_initializer", NodeCategory::kExpression},
    {"array_access", NodeCategory::kExpression},
    {"field_access", NodeCategory::kExpression},
    {"name", NodeCategory::kExpression},
    {"literal", NodeCategory::kExpression},
    {"this", NodeCategory::kExpression},
    {"super_access", NodeCategory::kExpression},
    {"lambda", NodeCategory::kExpression},
    {"method_reference", NodeCategory::kExpression},
    {"cast", NodeCategory::kExpression},
    {"conditional", NodeCategory::kExpression},
    {"binary", NodeCategory::kExpression},
    {"unary", NodeCategory::kExpression},
    {"postfix", NodeCategory::kExpression},
    {"assignment", NodeCategory::kExpression},
    {"instanceof", NodeCategory::kExpression},
    {"parenthesized", NodeCategory::kExpression},
    {"class_literal", NodeCategory::kExpression},
    {"type_reference", NodeCategory::kType},
    {"annotation", NodeCategory::kAnnotation},
    {"error", NodeCategory::kError},
}};

constexpr std::array<std::string_view, 7> kCategoryNames = {
    "declaration", "statement", "invocation", "expression",
    "type",        "annotation", "error"};

}  // namespace

std::string_view node_kind_name(NodeKind kind) {
  return kKinds[static_cast<std::size_t>(kind)].name;
}

std::optional<NodeKind> parse_node_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKinds.size(); ++i) {
    if (kKinds[i].name == name) return static_cast<NodeKind>(i);
  }
  return std::nullopt;
}

NodeCategory node_category(NodeKind kind) {
  return kKinds[static_cast<std::size_t>(kind)].category;
}

std::string_view node_category_name(NodeCategory category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<NodeCategory> parse_node_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<NodeCategory>(i);
  }
  return std::nullopt;
}

bool SyntaxNode::has_keyword(std::string_view word) const {
  return std::find(keywords.begin(), keywords.end(), word) != keywords.end();
}

SyntaxTree::SyntaxTree() { add(NodeKind::kCompilationUnit, 0); }

NodeId SyntaxTree::add(NodeKind kind, std::uint32_t offset) {
  SyntaxNode n;
  n.kind = kind;
  n.offset = offset;
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::size_t SyntaxTree::error_count() const {
  std::size_t n = 0;
  visit([&](NodeId, const SyntaxNode& node) {
    if (node.kind == NodeKind::kError) ++n;
  });
  return n;
}

std::size_t SyntaxTree::type_declaration_count() const {
  std::size_t n = 0;
  for (NodeId child : nodes_[root()].children) {
    switch (nodes_[child].kind) {
      case NodeKind::kClassDeclaration:
      case NodeKind::kInterfaceDeclaration:
      case NodeKind::kEnumDeclaration:
      case NodeKind::kRecordDeclaration:
      case NodeKind::kAnnotationTypeDeclaration:
        ++n;
        break;
      default:
        break;
    }
  }
  return n;
}

std::optional<std::string> SyntaxTree::resolve(std::string_view dotted) const {
  if (dotted.empty()) return std::nullopt;
  const auto dot = dotted.find('.');
  const std::string_view first = dotted.substr(0, dot);
  for (const auto& imp : imports_) {
    if (imp.is_wildcard) continue;
    const auto last_dot = imp.path.rfind('.');
    const std::string_view last =
        last_dot == std::string::npos
            ? std::string_view(imp.path)
            : std::string_view(imp.path).substr(last_dot + 1);
    if (last == first) {
      std::string out = imp.path;
      if (dot != std::string_view::npos) out += dotted.substr(dot);
      return out;
    }
  }
  // "java.sql.DriverManager": lower-case package segments, then a type.
  if (dot != std::string_view::npos &&
      std::islower(static_cast<unsigned char>(first.front()))) {
    std::size_t start = dot + 1;
    bool saw_package = false;
    while (start < dotted.size()) {
      const auto next = dotted.find('.', start);
      const char c = dotted[start];
      if (std::isupper(static_cast<unsigned char>(c))) {
        if (saw_package) return std::string(dotted);
        break;
      }
      if (next == std::string_view::npos) break;
      saw_package = true;
      start = next + 1;
    }
  }
  return std::nullopt;
}

std::string SyntaxTree::dump() const {
  std::string out;
  struct Frame {
    NodeId id;
    int depth;
  };
  std::vector<Frame> stack{{root(), 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const auto& n = nodes_[id];
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += node_kind_name(n.kind);
    if (!n.name.empty()) out += " name=" + n.name;
    if (!n.qualified.empty() && n.qualified != n.name) out += " q=" + n.qualified;
    if (!n.type_name.empty()) out += " type=" + n.type_name;
    if (!n.keywords.empty()) {
      out += " [";
      for (std::size_t i = 0; i < n.keywords.size(); ++i) {
        if (i) out += ' ';
        out += n.keywords[i];
      }
      out += ']';
    }
    out += '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      stack.push_back({*it, depth + 1});
    }
  }
  return out;
}

}  // namespace kurev::java
