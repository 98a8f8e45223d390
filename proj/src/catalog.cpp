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

#include "kurev/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kurev/error.hpp"
#include "kurev/hash.hpp"

namespace kurev {
namespace {

using json = nlohmann::ordered_json;

#include "builtin_catalog.inc"

std::string rule_ref(std::size_t index, const json& rule) {
  std::string ref = "rule #" + std::to_string(index + 1);
  if (rule.is_object()) {
    auto ku = rule.find("ku");
    auto cap = rule.find("capability");
    if (ku != rule.end() && cap != rule.end()) {
      ref += " (" + (ku->is_string() ? ku->get<std::string>() : ku->dump()) +
             "." + (cap->is_string() ? cap->get<std::string>() : cap->dump()) +
             ")";
    }
  }
  return ref;
}

std::vector<std::string> string_list(const json& value, const std::string& where,
                                     const char* field) {
  std::vector<std::string> out;
  if (value.is_string()) {
    out.push_back(value.get<std::string>());
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (!v.is_string()) {
        throw CatalogError(where + ": '" + field + "' entries must be strings");
      }
      out.push_back(v.get<std::string>());
    }
  } else {
    throw CatalogError(where + ": '" + field + "' must be a string or a list");
  }
  for (const auto& s : out) {
    if (s.empty()) throw CatalogError(where + ": empty '" + field + "' entry");
  }
  return out;
}

AstPattern parse_pattern(const json& p, const std::string& where) {
  if (!p.is_object()) throw CatalogError(where + ": pattern must be an object");
  AstPattern pat;
  for (const auto& [key, value] : p.items()) {
    if (key == "node_kind") {
      if (!value.is_string()) throw CatalogError(where + ": 'node_kind' must be a string");
      const auto text = value.get<std::string>();
      if (auto k = java::parse_node_kind(text)) {
        pat.kind = *k;
      } else if (auto c = java::parse_node_category(text)) {
        pat.category = *c;
      } else {
        throw CatalogError(where + ": unknown node_kind '" + text + "'");
      }
    } else if (key == "name") {
      pat.names = string_list(value, where, "name");
    } else if (key == "import_prefix") {
      pat.import_prefixes = string_list(value, where, "import_prefix");
    } else if (key == "keyword") {
      if (!value.is_string() || value.get<std::string>().empty()) {
        throw CatalogError(where + ": 'keyword' must be a non-empty string");
      }
      pat.keyword = value.get<std::string>();
    } else {
      throw CatalogError(where + ": unknown pattern field '" + key + "'");
    }
  }
  if (!pat.kind && !pat.category) {
    throw CatalogError(where + ": pattern lacks 'node_kind'");
  }
  return pat;
}

CapabilityRule parse_rule(const json& r, const std::string& where) {
  if (!r.is_object()) throw CatalogError(where + ": rule must be an object");
  CapabilityRule rule{CapabilityId{KuId::of(1), 0}, "", "", {}, true};
  bool have_ku = false;
  for (const auto& [key, value] : r.items()) {
    if (key == "ku") {
      std::optional<KuId> ku;
      if (value.is_number_integer()) ku = KuId::try_of(value.get<int>());
      if (value.is_string()) ku = KuId::parse(value.get<std::string>());
      if (!ku) throw CatalogError(where + ": 'ku' must name K1..K28");
      rule.id.ku = *ku;
      have_ku = true;
    } else if (key == "capability") {
      std::string label;
      if (value.is_number_integer()) {
        label = "C" + std::to_string(value.get<int>());
      } else if (value.is_string()) {
        label = value.get<std::string>();
      } else {
        throw CatalogError(where + ": 'capability' must be a string or integer");
      }
      std::size_t digits = 0;
      while (digits < label.size() && std::isalpha(static_cast<unsigned char>(label[digits]))) {
        ++digits;
      }
      const std::string number = label.substr(digits);
      if (number.empty() || digits > 1 ||
          !std::all_of(number.begin(), number.end(), ::isdigit) || number.size() > 4) {
        throw CatalogError(where + ": malformed capability '" + label + "'");
      }
      rule.id.cap_index = std::stoi(number);
      if (rule.id.cap_index < 1) {
        throw CatalogError(where + ": capability index must be at least 1");
      }
      if (digits == 0) label = "C" + number;
      rule.label = label;
    } else if (key == "description") {
      if (!value.is_string()) throw CatalogError(where + ": 'description' must be a string");
      rule.description = value.get<std::string>();
    } else if (key == "enabled") {
      if (!value.is_boolean()) throw CatalogError(where + ": 'enabled' must be a boolean");
      rule.enabled = value.get<bool>();
    } else if (key == "patterns") {
      if (!value.is_array()) throw CatalogError(where + ": 'patterns' must be a list");
      for (std::size_t i = 0; i < value.size(); ++i) {
        rule.patterns.push_back(
            parse_pattern(value[i], where + ", pattern #" + std::to_string(i + 1)));
      }
    } else {
      throw CatalogError(where + ": unknown rule field '" + key + "'");
    }
  }
  if (!have_ku) throw CatalogError(where + ": missing 'ku'");
  if (rule.id.cap_index == 0) throw CatalogError(where + ": missing 'capability'");
  if (rule.enabled && rule.patterns.empty()) {
    throw CatalogError(where + ": enabled rule has no patterns");
  }
  return rule;
}

std::string rule_name(const CapabilityRule& rule) { return capability_label(rule); }

json pattern_json(const AstPattern& p) {
  json j;
  j["node_kind"] = std::string(p.kind ? java::node_kind_name(*p.kind)
                                      : java::node_category_name(*p.category));
  if (!p.names.empty()) j["name"] = p.names;
  if (!p.import_prefixes.empty()) j["import_prefix"] = p.import_prefixes;
  if (!p.keyword.empty()) j["keyword"] = p.keyword;
  return j;
}

// True when `qualified` ends with `suffix` on a segment boundary.
bool segment_suffix(std::string_view qualified, std::string_view suffix) {
  if (!qualified.ends_with(suffix)) return false;
  if (qualified.size() == suffix.size()) return true;
  return qualified[qualified.size() - suffix.size() - 1] == '.';
}

bool name_matches(std::string_view pattern, const java::SyntaxNode& node) {
  if (pattern.ends_with(".*")) {
    const std::string_view owner = pattern.substr(0, pattern.size() - 2);
    const auto dot = node.qualified.rfind('.');
    if (dot == std::string::npos) return false;
    return segment_suffix(std::string_view(node.qualified).substr(0, dot), owner);
  }
  if (pattern.find('.') != std::string_view::npos) {
    return segment_suffix(node.qualified, pattern);
  }
  return node.name == pattern;
}

}  // namespace

std::string capability_label(const CapabilityRule& rule) {
  return rule.id.ku.label() + "." + rule.label;
}

CapabilityCatalog::CapabilityCatalog(std::vector<CapabilityRule> rules)
    : rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < rules_.size(); ++i) {
    if (rules_[i].id == rules_[i - 1].id) {
      throw CatalogError("duplicate capability " + rule_name(rules_[i]));
    }
  }
  for (const auto& r : rules_) {
    if (r.enabled && r.patterns.empty()) {
      throw CatalogError(rule_name(r) + ": enabled rule has no patterns");
    }
  }
  for (int k = 1; k <= kKuCount; ++k) {
    if (enabled_count(KuId::of(k)) == 0) {
      throw CatalogError("K" + std::to_string(k) + " has no enabled rule");
    }
  }
  hash_ = sha256_hex(serialize_catalog(*this));
}

std::vector<const CapabilityRule*> CapabilityCatalog::rules_for(KuId ku) const {
  std::vector<const CapabilityRule*> out;
  for (const auto& r : rules_) {
    if (r.id.ku == ku) out.push_back(&r);
  }
  return out;
}

const CapabilityRule* CapabilityCatalog::find(CapabilityId id) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), id,
                             [](const auto& r, const CapabilityId& v) { return r.id < v; });
  return it != rules_.end() && it->id == id ? &*it : nullptr;
}

std::size_t CapabilityCatalog::enabled_count(KuId ku) const {
  return static_cast<std::size_t>(std::count_if(
      rules_.begin(), rules_.end(),
      [&](const auto& r) { return r.id.ku == ku && r.enabled; }));
}

std::string_view builtin_catalog_text() { return kBuiltinCatalog; }

const CapabilityCatalog& builtin_catalog() {
  static const CapabilityCatalog catalog =
      parse_catalog(kBuiltinCatalog, "built-in catalog");
  return catalog;
}

CapabilityCatalog parse_catalog(std::string_view text, std::string_view origin) {
  const std::string where_doc(origin);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CatalogError(where_doc + ": not valid JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw CatalogError(where_doc + ": top level must be an object");
  bool extends = false;
  if (auto it = doc.find("extends"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != "builtin") {
      throw CatalogError(where_doc + ": 'extends' only accepts \"builtin\"");
    }
    extends = true;
  }
  if (auto it = doc.find("version"); it != doc.end() &&
                                     (!it->is_number_integer() || it->get<int>() != 1)) {
    throw CatalogError(where_doc + ": unsupported catalog version");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "extends" && key != "version" && key != "rules") {
      throw CatalogError(where_doc + ": unknown field '" + key + "'");
    }
  }
  auto rules_it = doc.find("rules");
  if (rules_it == doc.end() || !rules_it->is_array()) {
    throw CatalogError(where_doc + ": 'rules' must be a list");
  }
  std::vector<CapabilityRule> rules;
  std::set<CapabilityId> seen;
  for (std::size_t i = 0; i < rules_it->size(); ++i) {
    const json& r = (*rules_it)[i];
    const std::string where = where_doc + ": " + rule_ref(i, r);
    CapabilityRule rule = parse_rule(r, where);
    if (!seen.insert(rule.id).second) {
      throw CatalogError(where + ": duplicate capability");
    }
    rules.push_back(std::move(rule));
  }
  if (extends) {
    std::set<KuId> overridden;
    for (const auto& r : rules) overridden.insert(r.id.ku);
    for (const auto& r : builtin_catalog().rules()) {
      if (!overridden.count(r.id.ku)) rules.push_back(r);
    }
  }
  return CapabilityCatalog(std::move(rules));
}

CapabilityCatalog load_catalog(const std::optional<std::filesystem::path>& path) {
  if (!path) return builtin_catalog();
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw SetupError("cannot read catalog " + path->string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), path->string());
}

std::string serialize_catalog(const CapabilityCatalog& catalog) {
  json rules = json::array();
  for (const auto& r : catalog.rules()) {
    json j;
    j["ku"] = r.id.ku.label();
    j["capability"] = r.label;
    j["description"] = r.description;
    j["enabled"] = r.enabled;
    json pats = json::array();
    for (const auto& p : r.patterns) pats.push_back(pattern_json(p));
    j["patterns"] = std::move(pats);
    rules.push_back(std::move(j));
  }
  json doc;
  doc["version"] = 1;
  doc["rules"] = std::move(rules);
  return doc.dump(2) + "\n";
}

bool pattern_matches(const AstPattern& pattern, const java::SyntaxTree& tree,
                     const java::SyntaxNode& node) {
  if (pattern.kind) {
    if (node.kind != *pattern.kind) return false;
  } else if (java::node_category(node.kind) != *pattern.category) {
    return false;
  }
  if (!pattern.keyword.empty() && !node.has_keyword(pattern.keyword)) return false;
  if (!pattern.names.empty() &&
      std::none_of(pattern.names.begin(), pattern.names.end(),
                   [&](const std::string& n) { return name_matches(n, node); })) {
    return false;
  }
  if (!pattern.import_prefixes.empty()) {
    const std::string& subject = node.qualified.empty() ? node.name : node.qualified;
    if (auto resolved = tree.resolve(subject)) {
      const bool ok = std::any_of(
          pattern.import_prefixes.begin(), pattern.import_prefixes.end(),
          [&](const std::string& prefix) {
            return resolved->starts_with(prefix) &&
                   (resolved->size() == prefix.size() || (*resolved)[prefix.size()] == '.');
          });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace kurev
