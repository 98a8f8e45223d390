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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kurev/catalog.hpp"
#include "kurev/identity.hpp"
#include "kurev/ku.hpp"
#include "kurev/timestamp.hpp"

namespace kurev {

struct CommitRecord {
  std::string hash;
  std::string author;  // normalized "name <email>", aliases applied
  Timestamp authored_at;
  std::vector<std::string> changed_java_files;
  // Every changed path, Java or not; used by last-modifier baselines.
  std::vector<std::string> changed_files;

  bool operator==(const CommitRecord&) const = default;
};

enum class FileStatus { kOk, kParseError, kDeleted };

std::string_view file_status_name(FileStatus status);

struct FileKuRecord {
  std::string commit;
  std::string path;
  FileStatus status = FileStatus::kOk;
  std::optional<KuVector> vector;  // set only when status is kOk

  bool operator==(const FileKuRecord&) const = default;
};

struct MineOptions {
  bool all_commits = false;
  AliasMap aliases;
};

struct MineResult {
  std::vector<CommitRecord> commits;
  std::size_t skipped_commits = 0;
};

/// Commit records of HEAD's history, oldest first. Throws SetupError for a
/// path that is not a git repository.
MineResult mine_commits(const std::filesystem::path& repo,
                        const MineOptions& options = {});

enum class SnapshotStatus { kOk, kAbsent, kParseError };

struct Snapshot {
  SnapshotStatus status = SnapshotStatus::kAbsent;
  KuVector vector;
};

/// KU counts of the whole file `path` as it exists at `commit`.
Snapshot snapshot_file_kus(const std::filesystem::path& repo,
                           const std::string& commit, const std::string& path,
                           const CapabilityCatalog& catalog);

/// Commit and per-file KU records of one repository.
class KuStore {
 public:
  KuStore() = default;
  KuStore(std::vector<CommitRecord> commits, std::vector<FileKuRecord> files,
          std::string catalog_hash, std::size_t skipped_commits = 0);

  const std::vector<CommitRecord>& commits() const { return commits_; }
  const std::vector<FileKuRecord>& files() const { return files_; }
  const std::string& catalog_hash() const { return catalog_hash_; }
  std::size_t skipped_commits() const { return skipped_commits_; }

  const CommitRecord* commit(const std::string& hash) const;
  /// File records of one commit, in path order.
  std::vector<const FileKuRecord*> files_of(const std::string& hash) const;
  const FileKuRecord* file(const std::string& hash, const std::string& path) const;
  /// Most recent record of `path` from a commit authored strictly before
  /// `before`; deletions count as the most recent state.
  const FileKuRecord* latest_before(const std::string& path, Timestamp before) const;
  /// Indices into commits() authored by `author`.
  const std::vector<std::size_t>& commits_by(const std::string& author) const;

  bool operator==(const KuStore& other) const {
    return commits_ == other.commits_ && files_ == other.files_ &&
           catalog_hash_ == other.catalog_hash_ &&
           skipped_commits_ == other.skipped_commits_;
  }

 private:
  void build_index();

  std::vector<CommitRecord> commits_;
  std::vector<FileKuRecord> files_;
  std::string catalog_hash_;
  std::size_t skipped_commits_ = 0;
  std::map<std::string, std::size_t> commit_pos_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> file_range_;
  std::map<std::string, std::vector<std::size_t>> by_author_;
  // path -> (authored_at, file index) sorted by time then commit order
  std::map<std::string, std::vector<std::pair<Timestamp, std::size_t>>> by_path_;
};

struct StoreOptions {
  MineOptions mine;
  std::optional<std::filesystem::path> cache_dir;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Mines the repository and detects KUs in every changed Java file. Results
/// do not depend on the worker count or on the cache state.
KuStore build_ku_store(const std::filesystem::path& repo,
                       const CapabilityCatalog& catalog,
                       const StoreOptions& options = {});

/// Writes commits.jsonl, files.jsonl and index.json into `dir`.
void write_store(const KuStore& store, const std::filesystem::path& dir);
KuStore read_store(const std::filesystem::path& dir);

}  // namespace kurev
