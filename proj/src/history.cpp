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

#include "kurev/history.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kurev/detector.hpp"
#include "kurev/error.hpp"
#include "kurev/git.hpp"
#include "kurev/java/parser.hpp"
#include "kurev/log.hpp"

namespace kurev {
namespace {

using json = nlohmann::ordered_json;

bool is_java_path(std::string_view path) { return path.ends_with(".java"); }

struct MinedCommit {
  CommitRecord record;
  std::vector<git::Change> java_changes;
};

struct Mined {
  std::vector<MinedCommit> commits;
  std::size_t skipped = 0;
};

Mined mine(const git::Repository& repo, const MineOptions& options) {
  Mined out;
  for (const auto& c : repo.log(!options.all_commits)) {
    std::vector<git::Change> changes;
    try {
      changes = repo.changes(c);
    } catch (const DataError& e) {
      log_warning("skipping commit " + c.hash + ": " + e.what());
      ++out.skipped;
      continue;
    }
    MinedCommit m;
    m.record.hash = c.hash;
    m.record.author = options.aliases.resolve(commit_identity(c.author_name, c.author_email));
    m.record.authored_at = c.authored_at;
    for (auto& ch : changes) {
      m.record.changed_files.push_back(ch.path);
      if (is_java_path(ch.path)) {
        m.record.changed_java_files.push_back(ch.path);
        m.java_changes.push_back(std::move(ch));
      }
    }
    std::sort(m.record.changed_files.begin(), m.record.changed_files.end());
    std::sort(m.record.changed_java_files.begin(), m.record.changed_java_files.end());
    std::sort(m.java_changes.begin(), m.java_changes.end(),
              [](const auto& a, const auto& b) { return a.path < b.path; });
    out.commits.push_back(std::move(m));
  }
  return out;
}

struct Detection {
  FileStatus status = FileStatus::kOk;
  KuVector vector;
};

Detection detect_bytes(std::string_view bytes, const CapabilityCatalog& catalog) {
  try {
    return {FileStatus::kOk, detect_kus(bytes, catalog)};
  } catch (const ParseError&) {
    return {FileStatus::kParseError, {}};
  }
}

json counts_json(const KuVector& v) {
  json a = json::array();
  for (auto c : v.counts) a.push_back(c);
  return a;
}

KuVector counts_from_json(const json& a) {
  if (!a.is_array() || a.size() != static_cast<std::size_t>(kKuCount)) {
    throw DataError("KU vector must have 28 entries");
  }
  KuVector v;
  for (std::size_t i = 0; i < v.counts.size(); ++i) {
    if (!a[i].is_number_unsigned() && !(a[i].is_number_integer() && a[i].get<long long>() >= 0)) {
      throw DataError("KU counts must be non-negative integers");
    }
    v.counts[i] = a[i].get<std::uint64_t>();
  }
  return v;
}

class BlobCache {
 public:
  BlobCache(std::optional<std::filesystem::path> dir, const std::string& catalog_hash) {
    if (!dir) return;
    path_ = *dir / (catalog_hash + ".jsonl");
    std::error_code ec;
    if (!std::filesystem::exists(*path_, ec)) return;
    std::ifstream in(*path_, std::ios::binary);
    std::string line;
    std::size_t line_no = 0;
    try {
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const json j = json::parse(line);
        const std::string blob = j.at("blob").get<std::string>();
        const std::string status = j.at("status").get<std::string>();
        Detection d;
        if (status == "ok") {
          d.vector = counts_from_json(j.at("counts"));
        } else if (status == "parse_error") {
          d.status = FileStatus::kParseError;
        } else {
          throw DataError("bad status");
        }
        entries_[blob] = d;
      }
    } catch (const std::exception& e) {
      log_warning("cache " + path_->string() + " is corrupt at line " +
                  std::to_string(line_no) + "; rebuilding from scratch");
      entries_.clear();
      in.close();
      std::filesystem::remove(*path_, ec);
      dirty_ = true;
    }
  }

  const Detection* find(const std::string& blob) const {
    auto it = entries_.find(blob);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void put(const std::string& blob, const Detection& d) {
    entries_[blob] = d;
    dirty_ = true;
  }

  void flush() {
    if (!path_ || !dirty_) return;
    std::filesystem::create_directories(path_->parent_path());
    const auto tmp = path_->string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw SetupError("cannot write cache " + tmp);
      for (const auto& [blob, d] : entries_) {
        json j;
        j["blob"] = blob;
        j["status"] = d.status == FileStatus::kOk ? "ok" : "parse_error";
        if (d.status == FileStatus::kOk) j["counts"] = counts_json(d.vector);
        out << j.dump() << '\n';
      }
    }
    std::filesystem::rename(tmp, *path_);
    dirty_ = false;
  }

 private:
  std::optional<std::filesystem::path> path_;
  std::map<std::string, Detection> entries_;
  bool dirty_ = false;
};

template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SetupError("cannot write " + path.string());
  out << text;
  if (!out) throw SetupError("cannot write " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SetupError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> string_array(const json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace

std::string_view file_status_name(FileStatus status) {
  switch (status) {
    case FileStatus::kOk: return "ok";
    case FileStatus::kParseError: return "parse_error";
    case FileStatus::kDeleted: return "deleted";
  }
  return "ok";
}

MineResult mine_commits(const std::filesystem::path& repo_path, const MineOptions& options) {
  const git::Repository repo(repo_path);
  Mined m = mine(repo, options);
  MineResult out;
  out.skipped_commits = m.skipped;
  for (auto& c : m.commits) out.commits.push_back(std::move(c.record));
  return out;
}

Snapshot snapshot_file_kus(const std::filesystem::path& repo_path, const std::string& commit,
                           const std::string& path, const CapabilityCatalog& catalog) {
  const git::Repository repo(repo_path);
  const auto blob = repo.blob_at(commit, path);
  if (!blob) return {SnapshotStatus::kAbsent, {}};
  const auto bytes = repo.read_blobs({*blob});
  if (!bytes.front()) return {SnapshotStatus::kAbsent, {}};
  const Detection d = detect_bytes(*bytes.front(), catalog);
  if (d.status != FileStatus::kOk) return {SnapshotStatus::kParseError, {}};
  return {SnapshotStatus::kOk, d.vector};
}

KuStore::KuStore(std::vector<CommitRecord> commits, std::vector<FileKuRecord> files,
                 std::string catalog_hash, std::size_t skipped_commits)
    : commits_(std::move(commits)),
      files_(std::move(files)),
      catalog_hash_(std::move(catalog_hash)),
      skipped_commits_(skipped_commits) {
  build_index();
}

void KuStore::build_index() {
  for (std::size_t i = 0; i < commits_.size(); ++i) {
    if (!commit_pos_.emplace(commits_[i].hash, i).second) {
      throw DataError("duplicate commit " + commits_[i].hash);
    }
    by_author_[commits_[i].author].push_back(i);
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < files_.size(); ++i) {
    const auto& f = files_[i];
    auto pos = commit_pos_.find(f.commit);
    if (pos == commit_pos_.end()) {
      throw DataError("file record " + f.path + " names unknown commit " + f.commit);
    }
    const auto& changed = commits_[pos->second].changed_java_files;
    if (std::find(changed.begin(), changed.end(), f.path) == changed.end()) {
      throw DataError("file record " + f.path + " is not a change of " + f.commit);
    }
    if (!seen.emplace(f.commit, f.path).second) {
      throw DataError("duplicate file record " + f.commit + ":" + f.path);
    }
    if ((f.status == FileStatus::kOk) != f.vector.has_value()) {
      throw DataError("file record " + f.commit + ":" + f.path + " has inconsistent vector");
    }
    auto [it, inserted] = file_range_.emplace(f.commit, std::make_pair(i, i + 1));
    if (!inserted) {
      if (it->second.second != i) throw DataError("file records of " + f.commit + " are not contiguous");
      it->second.second = i + 1;
    }
    by_path_[f.path].emplace_back(commits_[pos->second].authored_at, i);
  }
  for (auto& [path, entries] : by_path_) {
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

const CommitRecord* KuStore::commit(const std::string& hash) const {
  auto it = commit_pos_.find(hash);
  return it == commit_pos_.end() ? nullptr : &commits_[it->second];
}

std::vector<const FileKuRecord*> KuStore::files_of(const std::string& hash) const {
  std::vector<const FileKuRecord*> out;
  auto it = file_range_.find(hash);
  if (it == file_range_.end()) return out;
  for (std::size_t i = it->second.first; i < it->second.second; ++i) out.push_back(&files_[i]);
  return out;
}

const FileKuRecord* KuStore::file(const std::string& hash, const std::string& path) const {
  for (const auto* f : files_of(hash)) {
    if (f->path == path) return f;
  }
  return nullptr;
}

const FileKuRecord* KuStore::latest_before(const std::string& path, Timestamp before) const {
  auto it = by_path_.find(path);
  if (it == by_path_.end()) return nullptr;
  const FileKuRecord* best = nullptr;
  for (const auto& [t, idx] : it->second) {
    if (t >= before) break;
    best = &files_[idx];
  }
  return best;
}

const std::vector<std::size_t>& KuStore::commits_by(const std::string& author) const {
  static const std::vector<std::size_t> kNone;
  auto it = by_author_.find(author);
  return it == by_author_.end() ? kNone : it->second;
}

KuStore build_ku_store(const std::filesystem::path& repo_path, const CapabilityCatalog& catalog,
                       const StoreOptions& options) {
  const git::Repository repo(repo_path);
  Mined mined = mine(repo, options.mine);
  BlobCache cache(options.cache_dir, catalog.hash());

  // Blobs needed and not cached, in first-seen order.
  std::vector<std::string> todo;
  std::set<std::string> queued;
  for (const auto& c : mined.commits) {
    for (const auto& ch : c.java_changes) {
      if (ch.blob.empty() || cache.find(ch.blob) || !queued.insert(ch.blob).second) continue;
      todo.push_back(ch.blob);
    }
  }
  const auto contents = repo.read_blobs(todo);
  std::set<std::string> unreadable;
  std::vector<Detection> detected(todo.size());
  parallel_for(todo.size(), options.workers, [&](std::size_t i) {
    if (contents[i]) detected[i] = detect_bytes(*contents[i], catalog);
  });
  for (std::size_t i = 0; i < todo.size(); ++i) {
    if (!contents[i]) {
      unreadable.insert(todo[i]);
      continue;
    }
    cache.put(todo[i], detected[i]);
  }

  std::vector<CommitRecord> commits;
  std::vector<FileKuRecord> files;
  std::size_t skipped = mined.skipped;
  for (auto& c : mined.commits) {
    const bool broken = std::any_of(c.java_changes.begin(), c.java_changes.end(),
                                    [&](const auto& ch) { return unreadable.count(ch.blob) > 0; });
    if (broken) {
      log_warning("skipping commit " + c.record.hash + ": unreadable object");
      ++skipped;
      continue;
    }
    for (const auto& ch : c.java_changes) {
      FileKuRecord rec;
      rec.commit = c.record.hash;
      rec.path = ch.path;
      if (ch.blob.empty()) {
        rec.status = FileStatus::kDeleted;
      } else {
        const Detection* d = cache.find(ch.blob);
        rec.status = d->status;
        if (d->status == FileStatus::kOk) {
          rec.vector = d->vector;
        } else {
          log_warning("cannot parse " + ch.path + " at " + c.record.hash + "; no KU credit");
        }
      }
      files.push_back(std::move(rec));
    }
    commits.push_back(std::move(c.record));
  }
  cache.flush();
  return KuStore(std::move(commits), std::move(files), catalog.hash(), skipped);
}

void write_store(const KuStore& store, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::string commits;
  for (const auto& c : store.commits()) {
    json j;
    j["hash"] = c.hash;
    j["author"] = c.author;
    j["authored_at"] = c.authored_at.to_rfc3339();
    j["changed_java_files"] = c.changed_java_files;
    j["changed_files"] = c.changed_files;
    commits += j.dump() + "\n";
  }
  std::string files;
  for (const auto& f : store.files()) {
    json j;
    j["commit"] = f.commit;
    j["path"] = f.path;
    j["status"] = std::string(file_status_name(f.status));
    j["vector"] = f.vector ? counts_json(*f.vector) : json(nullptr);
    files += j.dump() + "\n";
  }
  json index;
  index["format"] = "kurev-store";
  index["version"] = 1;
  index["catalog_hash"] = store.catalog_hash();
  index["commits"] = store.commits().size();
  index["files"] = store.files().size();
  index["skipped_commits"] = store.skipped_commits();
  write_text(dir / "commits.jsonl", commits);
  write_text(dir / "files.jsonl", files);
  write_text(dir / "index.json", index.dump(2) + "\n");
}

KuStore read_store(const std::filesystem::path& dir) {
  json index;
  try {
    index = json::parse(read_text(dir / "index.json"));
  } catch (const json::exception& e) {
    throw DataError("store index " + (dir / "index.json").string() + ": " + e.what());
  }
  if (index.value("format", "") != "kurev-store") {
    throw DataError(dir.string() + " is not a KU store");
  }
  std::vector<CommitRecord> commits;
  std::vector<FileKuRecord> files;
  auto each_line = [&](const std::string& name, auto&& fn) {
    std::istringstream in(read_text(dir / name));
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (line.empty()) continue;
      try {
        fn(json::parse(line));
      } catch (const json::exception& e) {
        throw SchemaError(n, name, e.what());
      }
    }
  };
  each_line("commits.jsonl", [&](const json& j) {
    CommitRecord c;
    c.hash = j.at("hash").get<std::string>();
    c.author = j.at("author").get<std::string>();
    c.authored_at = Timestamp::parse_rfc3339(j.at("authored_at").get<std::string>());
    c.changed_java_files = string_array(j.at("changed_java_files"));
    c.changed_files = string_array(j.at("changed_files"));
    commits.push_back(std::move(c));
  });
  each_line("files.jsonl", [&](const json& j) {
    FileKuRecord f;
    f.commit = j.at("commit").get<std::string>();
    f.path = j.at("path").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status == "ok") {
      f.status = FileStatus::kOk;
      f.vector = counts_from_json(j.at("vector"));
    } else if (status == "parse_error") {
      f.status = FileStatus::kParseError;
    } else if (status == "deleted") {
      f.status = FileStatus::kDeleted;
    } else {
      throw DataError("unknown file status '" + status + "'");
    }
    files.push_back(std::move(f));
  });
  return KuStore(std::move(commits), std::move(files), index.value("catalog_hash", ""),
                 index.value("skipped_commits", std::size_t{0}));
}

}  // namespace kurev
