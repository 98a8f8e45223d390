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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kurev/timestamp.hpp"

namespace kurev::git {

struct Commit {
  std::string hash;
  std::vector<std::string> parents;
  std::string author_name;
  std::string author_email;
  Timestamp authored_at;
};

struct Change {
  char status = 'M';  // A, M, D, T ...
  std::string path;
  std::string blob;  // new blob id; empty for deletions
};

/// Thin wrapper over the git command-line client.
class Repository {
 public:
  /// Throws SetupError when `path` is not inside a git work tree or bare repo.
  explicit Repository(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  /// False for a freshly initialised repository without commits.
  bool has_head() const;

  /// HEAD history oldest first. With first_parent, merges contribute only
  /// their first-parent line.
  std::vector<Commit> log(bool first_parent) const;

  /// Files changed by `commit` relative to its first parent (everything for a
  /// root commit). Throws DataError when git cannot produce the diff.
  std::vector<Change> changes(const Commit& commit) const;

  /// Blob contents in request order; nullopt for ids git cannot read.
  std::vector<std::optional<std::string>> read_blobs(
      const std::vector<std::string>& ids) const;

  /// Blob id of `path` at `commit`, nullopt when the path is absent there.
  std::optional<std::string> blob_at(const std::string& commit,
                                     const std::string& path) const;

  std::string head() const;

 private:
  std::vector<std::string> git_args(std::initializer_list<std::string> rest) const;

  std::filesystem::path path_;
};

}  // namespace kurev::git
