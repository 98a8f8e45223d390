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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kurev::java {

enum class NodeKind : std::uint8_t {
  // declarations
  kCompilationUnit,
  kPackageDeclaration,
  kImportDeclaration,
  kClassDeclaration,
  kInterfaceDeclaration,
  kEnumDeclaration,
  kRecordDeclaration,
  kAnnotationTypeDeclaration,
  kAnonymousClass,
  kMethodDeclaration,
  kConstructorDeclaration,
  kFieldDeclaration,
  kLocalVariableDeclaration,
  kParameter,
  kInitializer,
  kEnumConstant,
  kTypeParameter,
  kModifier,
  // statements
  kBlock,
  kIfStatement,
  kSwitchStatement,
  kSwitchCase,
  kWhileStatement,
  kDoStatement,
  kForStatement,
  kEnhancedForStatement,
  kBreakStatement,
  kContinueStatement,
  kReturnStatement,
  kThrowStatement,
  kTryStatement,
  kCatchClause,
  kFinallyClause,
  kSynchronizedStatement,
  kAssertStatement,
  kYieldStatement,
  kLabeledStatement,
  kExpressionStatement,
  kEmptyStatement,
  // invocations
  kMethodInvocation,
  kConstructorInvocation,
  kSuperConstructorInvocation,
  // expressions
  kSwitchExpression,
  kObjectCreation,
  kArrayCreation,
  kArrayInitializer,
  kArrayAccess,
  kFieldAccess,
  kName,
  kLiteral,
  kThis,
  kSuperAccess,
  kLambda,
  kMethodReference,
  kCast,
  kConditional,
  kBinary,
  kUnary,
  kPostfix,
  kAssignment,
  kInstanceof,
  kParenthesized,
  kClassLiteral,
  // types and annotations
  kTypeReference,
  kAnnotation,
  // recovery
  kError,
};

inline constexpr std::size_t kNodeKindCount =
    static_cast<std::size_t>(NodeKind::kError) + 1;

/// Coarse grouping of node kinds; catalog patterns may select a whole
/// category instead of a single kind.
enum class NodeCategory : std::uint8_t {
  kDeclaration,
  kStatement,
  kInvocation,
  kExpression,
  kType,
  kAnnotation,
  kError,
};

/// snake_case name used in catalog files ("try_statement").
std::string_view node_kind_name(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view name);
NodeCategory node_category(NodeKind kind);
std::string_view node_category_name(NodeCategory category);
std::optional<NodeCategory> parse_node_category(std::string_view name);

using NodeId = std::uint32_t;

struct SyntaxNode {
  NodeKind kind = NodeKind::kError;
  // Simple name, operator or modifier word, depending on kind.
  std::string name;
  // Dotted form where one exists (qualified type, receiver.method).
  std::string qualified;
  // Simple name of the declared/target type for declarations and casts.
  std::string type_name;
  // Modifiers and structural tags ("abstract", "generic", "multi_dim").
  std::vector<std::string> keywords;
  std::uint32_t offset = 0;
  std::vector<NodeId> children;

  bool has_keyword(std::string_view word) const;
};

struct ImportEntry {
  std::string path;  // "java.util.List" or "java.util" for on-demand imports
  bool is_static = false;
  bool is_wildcard = false;
};

/// Arena-backed syntax tree for one compilation unit. Node 0 is the root.
class SyntaxTree {
 public:
  SyntaxTree();

  NodeId root() const { return 0; }
  const SyntaxNode& node(NodeId id) const { return nodes_[id]; }
  SyntaxNode& node(NodeId id) { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }

  NodeId add(NodeKind kind, std::uint32_t offset);
  void attach(NodeId parent, NodeId child) { nodes_[parent].children.push_back(child); }

  const std::vector<ImportEntry>& imports() const { return imports_; }
  void add_import(ImportEntry entry) { imports_.push_back(std::move(entry)); }
  const std::string& package_name() const { return package_; }
  void set_package_name(std::string name) { package_ = std::move(name); }

  /// Error nodes reachable from the root.
  std::size_t error_count() const;
  /// Top-level type declarations.
  std::size_t type_declaration_count() const;

  /// Fully qualified form of a dotted name as far as single-type imports tell;
  /// nullopt when the file carries no information about the first segment.
  std::optional<std::string> resolve(std::string_view dotted) const;

  /// Preorder traversal of every node reachable from the root.
  template <typename Fn>
  void visit(Fn&& fn) const {
    std::vector<NodeId> stack{root()};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      fn(id, nodes_[id]);
      const auto& kids = nodes_[id].children;
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
  }

  /// Indented s-expression-like dump, for debugging and tests.
  std::string dump() const;

 private:
  std::vector<SyntaxNode> nodes_;
  std::vector<ImportEntry> imports_;
  std::string package_;
};

}  // namespace kurev::java
