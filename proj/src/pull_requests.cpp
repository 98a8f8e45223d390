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

#include "kurev/pull_requests.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kurev/error.hpp"

namespace kurev {
namespace {

using json = nlohmann::ordered_json;

// `field` may carry a "parent." prefix for messages; only the last segment is
// looked up.
const json& require(const json& obj, std::size_t record, const std::string& field) {
  const auto dot = field.rfind('.');
  auto it = obj.find(dot == std::string::npos ? field : field.substr(dot + 1));
  if (it == obj.end() || it->is_null()) throw SchemaError(record, field, "missing");
  return *it;
}

std::string require_string(const json& v, std::size_t record, const std::string& field) {
  if (!v.is_string()) throw SchemaError(record, field, "must be a string");
  return v.get<std::string>();
}

Timestamp require_time(const json& v, std::size_t record, const std::string& field) {
  const std::string text = require_string(v, record, field);
  try {
    return Timestamp::parse_rfc3339(text);
  } catch (const DataError& e) {
    throw SchemaError(record, field, e.what());
  }
}

std::string require_identity(const json& v, std::size_t record, const std::string& field,
                             const AliasMap& aliases) {
  const std::string raw = require_string(v, record, field);
  std::string id = aliases.resolve(raw);
  if (id.empty()) throw SchemaError(record, field, "empty identity");
  return id;
}

PullRequest parse_record(const json& j, std::size_t record, const AliasMap& aliases,
                         std::string& project) {
  if (!j.is_object()) throw SchemaError(record, "<record>", "must be an object");
  static const std::set<std::string> kKnown = {
      "id", "opened_at", "state", "author", "changed_files", "reviewers",
      "review_comments", "head_commit", "project"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.count(key)) throw SchemaError(record, key, "unknown field");
  }
  PullRequest pr;
  const json& id = require(j, record, "id");
  if (!id.is_number_integer()) throw SchemaError(record, "id", "must be an integer");
  pr.id = id.get<std::int64_t>();
  pr.opened_at = require_time(require(j, record, "opened_at"), record, "opened_at");
  const std::string state = require_string(require(j, record, "state"), record, "state");
  if (state == "open") {
    pr.state = PrState::kOpen;
  } else if (state == "closed") {
    pr.state = PrState::kClosed;
  } else {
    throw SchemaError(record, "state", "must be \"open\" or \"closed\"");
  }
  pr.author = require_identity(require(j, record, "author"), record, "author", aliases);
  const json& files = require(j, record, "changed_files");
  if (!files.is_array()) throw SchemaError(record, "changed_files", "must be a list");
  std::set<std::string> seen_files;
  for (const auto& f : files) {
    std::string path = require_string(f, record, "changed_files");
    if (path.empty()) throw SchemaError(record, "changed_files", "empty path");
    if (seen_files.insert(path).second) pr.changed_files.push_back(std::move(path));
  }
  const json& reviewers = require(j, record, "reviewers");
  if (!reviewers.is_array()) throw SchemaError(record, "reviewers", "must be a list");
  std::set<std::string> rs;
  for (const auto& r : reviewers) rs.insert(require_identity(r, record, "reviewers", aliases));
  pr.reviewers.assign(rs.begin(), rs.end());
  if (auto it = j.find("review_comments"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw SchemaError(record, "review_comments", "must be a list");
    for (const auto& c : *it) {
      if (!c.is_object()) throw SchemaError(record, "review_comments", "entries must be objects");
      for (const auto& [key, value] : c.items()) {
        if (key != "reviewer" && key != "path" && key != "commented_at") {
          throw SchemaError(record, "review_comments." + key, "unknown field");
        }
      }
      ReviewComment rc;
      rc.reviewer = require_identity(require(c, record, "review_comments.reviewer"), record,
                                     "review_comments.reviewer", aliases);
      if (auto p = c.find("path"); p != c.end() && !p->is_null()) {
        rc.path = require_string(*p, record, "review_comments.path");
      }
      rc.commented_at = require_time(require(c, record, "review_comments.commented_at"), record,
                                     "review_comments.commented_at");
      if (rc.commented_at < pr.opened_at) {
        throw SchemaError(record, "review_comments.commented_at", "precedes opened_at");
      }
      pr.review_comments.push_back(std::move(rc));
    }
  }
  if (auto it = j.find("head_commit"); it != j.end() && !it->is_null()) {
    pr.head_commit = require_string(*it, record, "head_commit");
  }
  if (auto it = j.find("project"); it != j.end() && !it->is_null()) {
    const std::string p = require_string(*it, record, "project");
    if (project.empty()) {
      project = p;
    } else if (project != p) {
      throw SchemaError(record, "project", "differs from earlier records");
    }
  }
  return pr;
}

void sort_prs(std::vector<PullRequest>& prs) {
  std::sort(prs.begin(), prs.end(), [](const auto& a, const auto& b) {
    return a.opened_at != b.opened_at ? a.opened_at < b.opened_at : a.id < b.id;
  });
}

}  // namespace

std::vector<std::string> PullRequest::java_files() const {
  std::vector<std::string> out;
  for (const auto& f : changed_files) {
    if (f.ends_with(".java")) out.push_back(f);
  }
  return out;
}

bool PullRequest::reviewed_by(std::string_view identity) const {
  return std::binary_search(reviewers.begin(), reviewers.end(), identity);
}

const PullRequest* PrDataset::find(std::int64_t id) const {
  for (const auto& pr : prs) {
    if (pr.id == id) return &pr;
  }
  return nullptr;
}

PrDataset parse_prs(std::string_view text, const AliasMap& aliases) {
  PrDataset ds;
  std::set<std::int64_t> ids;
  std::size_t record = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    ++record;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError(record, "<record>", std::string("invalid JSON: ") + e.what());
    }
    PullRequest pr = parse_record(j, record, aliases, ds.project);
    if (!ids.insert(pr.id).second) {
      throw SchemaError(record, "id", "duplicate id " + std::to_string(pr.id));
    }
    ds.prs.push_back(std::move(pr));
  }
  sort_prs(ds.prs);
  return ds;
}

PrDataset load_prs(const std::filesystem::path& path, const AliasMap& aliases) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SetupError("cannot read PR export " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_prs(buf.str(), aliases);
}

std::string serialize_prs(const PrDataset& ds) {
  std::string out;
  for (const auto& pr : ds.prs) {
    json j;
    j["id"] = pr.id;
    if (!ds.project.empty()) j["project"] = ds.project;
    j["opened_at"] = pr.opened_at.to_rfc3339();
    j["state"] = pr.state == PrState::kOpen ? "open" : "closed";
    j["author"] = pr.author;
    j["changed_files"] = pr.changed_files;
    j["reviewers"] = pr.reviewers;
    json comments = json::array();
    for (const auto& c : pr.review_comments) {
      json cj;
      cj["reviewer"] = c.reviewer;
      cj["path"] = c.path ? json(*c.path) : json(nullptr);
      cj["commented_at"] = c.commented_at.to_rfc3339();
      comments.push_back(std::move(cj));
    }
    j["review_comments"] = std::move(comments);
    if (pr.head_commit) j["head_commit"] = *pr.head_commit;
    out += j.dump() + "\n";
  }
  return out;
}

void save_prs(const PrDataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SetupError("cannot write " + path.string());
  out << serialize_prs(ds);
}

FilterResult filter_prs(const PrDataset& ds) {
  FilterResult r;
  r.kept.project = ds.project;
  for (const auto& pr : ds.prs) {
    if (pr.state != PrState::kClosed || pr.reviewers.empty() || pr.java_files().empty()) continue;
    r.kept.prs.push_back(pr);
  }
  r.eligible = r.kept.prs.size() >= kMinEligiblePrs;
  return r;
}

std::pair<PrDataset, PrDataset> chronological_split(const PrDataset& ds, double train_fraction) {
  const std::size_t n = ds.prs.size();
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw SplitError("train fraction must lie strictly between 0 and 1");
  }
  if (n < 5) throw SplitError("need at least 5 PRs to split, got " + std::to_string(n));
  // The epsilon keeps products like 0.8 * 10 from landing just below 8.
  const auto train_n = static_cast<std::size_t>(
      std::floor(train_fraction * static_cast<double>(n) + 1e-9));
  if (train_n == 0 || train_n >= n) {
    throw SplitError("split would leave one side empty");
  }
  PrDataset train{ds.project, {}};
  PrDataset test{ds.project, {}};
  std::vector<PullRequest> sorted = ds.prs;
  sort_prs(sorted);
  train.prs.assign(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(train_n));
  test.prs.assign(sorted.begin() + static_cast<std::ptrdiff_t>(train_n), sorted.end());
  return {std::move(train), std::move(test)};
}

}  // namespace kurev
