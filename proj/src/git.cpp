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

#include "kurev/git.hpp"

#include <charconv>

#include "kurev/error.hpp"
#include "kurev/subprocess.hpp"

namespace kurev::git {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

ProcessOptions quiet_env(std::string input = {}) {
  ProcessOptions o;
  o.input = std::move(input);
  o.env = {{"LC_ALL", "C"}, {"GIT_TERMINAL_PROMPT", "0"}};
  return o;
}

}  // namespace

Repository::Repository(std::filesystem::path path) : path_(std::move(path)) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path_, ec)) {
    throw SetupError("not a directory: " + path_.string());
  }
  const auto r = run_process(git_args({"rev-parse", "--git-dir"}), quiet_env());
  if (r.exit_code != 0) {
    throw SetupError("not a git repository: " + path_.string());
  }
}

std::vector<std::string> Repository::git_args(
    std::initializer_list<std::string> rest) const {
  std::vector<std::string> args{"git", "-C", path_.string(), "-c",
                                "core.quotepath=off"};
  args.insert(args.end(), rest.begin(), rest.end());
  return args;
}

bool Repository::has_head() const {
  return run_process(git_args({"rev-parse", "--verify", "-q", "HEAD^{commit}"}),
                     quiet_env())
             .exit_code == 0;
}

std::string Repository::head() const {
  if (!has_head()) return {};
  return trimmed(run_process(git_args({"rev-parse", "HEAD"}), quiet_env()).out);
}

std::vector<Commit> Repository::log(bool first_parent) const {
  if (!has_head()) return {};
  std::vector<std::string> args =
      git_args({"log", "--reverse", "--format=%H%x1f%P%x1f%an%x1f%ae%x1f%at%x1e"});
  if (first_parent) args.push_back("--first-parent");
  args.push_back("HEAD");
  args.push_back("--");
  const auto r = run_process(args, quiet_env());
  if (r.exit_code != 0) throw SetupError("git log failed: " + trimmed(r.err));
  std::vector<Commit> commits;
  for (std::string_view rec : split(r.out, '\x1e')) {
    while (!rec.empty() && (rec.front() == '\n' || rec.front() == '\r')) rec.remove_prefix(1);
    if (rec.empty()) continue;
    const auto f = split(rec, '\x1f');
    if (f.size() != 5) throw DataError("unexpected git log record");
    Commit c;
    c.hash = std::string(f[0]);
    for (auto p : split(f[1], ' ')) {
      if (!p.empty()) c.parents.emplace_back(p);
    }
    c.author_name = std::string(f[2]);
    c.author_email = std::string(f[3]);
    std::int64_t secs = 0;
    std::from_chars(f[4].data(), f[4].data() + f[4].size(), secs);
    c.authored_at = Timestamp(secs);
    commits.push_back(std::move(c));
  }
  return commits;
}

std::vector<Change> Repository::changes(const Commit& commit) const {
  std::vector<std::string> args = git_args({"diff-tree", "-r", "-z", "--no-renames",
                                            "--no-commit-id", "--no-ext-diff"});
  if (commit.parents.empty()) {
    args.push_back("--root");
    args.push_back(commit.hash);
  } else {
    args.push_back(commit.parents.front());
    args.push_back(commit.hash);
  }
  const auto r = run_process(args, quiet_env());
  if (r.exit_code != 0) {
    throw DataError("git diff-tree failed for " + commit.hash + ": " + trimmed(r.err));
  }
  std::vector<Change> out;
  const auto parts = split(r.out, '\0');
  for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
    std::string_view meta = parts[i];
    if (meta.empty()) break;
    // ":100644 100644 <old> <new> M"
    if (meta.front() == ':') meta.remove_prefix(1);
    const auto f = split(meta, ' ');
    if (f.size() < 5) throw DataError("unexpected diff-tree output for " + commit.hash);
    Change c;
    c.status = f[4].empty() ? 'M' : f[4].front();
    c.path = std::string(parts[i + 1]);
    if (c.status != 'D') c.blob = std::string(f[3]);
    // Submodule entries (mode 160000) are not files.
    if (f[1] == "160000" || (c.status == 'D' && f[0] == "160000")) continue;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::optional<std::string>> Repository::read_blobs(
    const std::vector<std::string>& ids) const {
  std::vector<std::optional<std::string>> out;
  out.reserve(ids.size());
  constexpr std::size_t kChunk = 256;
  for (std::size_t start = 0; start < ids.size(); start += kChunk) {
    const std::size_t end = std::min(ids.size(), start + kChunk);
    std::string request;
    for (std::size_t i = start; i < end; ++i) request += ids[i] + "\n";
    const auto r = run_process(git_args({"cat-file", "--batch"}), quiet_env(request));
    if (r.exit_code != 0) throw DataError("git cat-file failed: " + trimmed(r.err));
    std::string_view rest = r.out;
    for (std::size_t i = start; i < end; ++i) {
      const auto nl = rest.find('\n');
      if (nl == std::string_view::npos) throw DataError("truncated cat-file output");
      const auto header = split(rest.substr(0, nl), ' ');
      rest.remove_prefix(nl + 1);
      if (header.size() != 3) {
        out.emplace_back(std::nullopt);  // "<id> missing"
        continue;
      }
      std::size_t size = 0;
      std::from_chars(header[2].data(), header[2].data() + header[2].size(), size);
      if (rest.size() < size + 1) throw DataError("truncated cat-file output");
      if (header[1] == "blob") {
        out.emplace_back(std::string(rest.substr(0, size)));
      } else {
        out.emplace_back(std::nullopt);
      }
      rest.remove_prefix(size + 1);
    }
  }
  return out;
}

std::optional<std::string> Repository::blob_at(const std::string& commit,
                                               const std::string& path) const {
  const auto r = run_process(
      git_args({"rev-parse", "--verify", "-q", commit + ":" + path}), quiet_env());
  if (r.exit_code != 0) return std::nullopt;
  std::string id = trimmed(r.out);
  const auto t = run_process(git_args({"cat-file", "-t", id}), quiet_env());
  if (trimmed(t.out) != "blob") return std::nullopt;
  return id;
}

}  // namespace kurev::git
