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

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kurev/history.hpp"
#include "kurev/ku.hpp"
#include "kurev/pull_requests.hpp"
#include "kurev/timestamp.hpp"

namespace kurev {

enum class ExpertiseKind { kDevelopment, kReview };

using KuRow = std::array<double, kKuCount>;

/// Developers x KUs. Each active column holds ratios summing to one.
class ExpertiseMatrix {
 public:
  ExpertiseMatrix() = default;
  ExpertiseMatrix(ExpertiseKind kind, Timestamp cutoff,
                  std::map<std::string, KuRow> rows);

  ExpertiseKind kind() const { return kind_; }
  Timestamp cutoff() const { return cutoff_; }
  const std::vector<std::string>& developers() const { return developers_; }
  const std::vector<KuRow>& values() const { return values_; }
  bool has(const std::string& developer) const;
  /// Zero for developers outside the matrix.
  double value(const std::string& developer, KuId ku) const;
  const KuRow* row(const std::string& developer) const;

 private:
  ExpertiseKind kind_ = ExpertiseKind::kDevelopment;
  Timestamp cutoff_;
  std::vector<std::string> developers_;
  std::vector<KuRow> values_;
  std::map<std::string, std::size_t> index_;
};

/// Last activity per (developer, KU).
class LastTouch {
 public:
  void touch(const std::string& developer, KuId ku, Timestamp when);
  std::optional<Timestamp> get(const std::string& developer, KuId ku) const;
  const std::map<std::string, std::array<std::optional<Timestamp>, kKuCount>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::array<std::optional<Timestamp>, kKuCount>> entries_;
};

struct Profile {
  ExpertiseMatrix matrix;
  LastTouch last;
};

/// Raw per-developer occurrence sums before column normalization.
class ExpertiseAccumulator {
 public:
  /// Registers the developer even when `counts` is all zero.
  void add(const std::string& developer, const KuVector& counts, Timestamp when);
  Profile finish(ExpertiseKind kind, Timestamp cutoff) const;
  const std::map<std::string, std::array<double, kKuCount>>& raw() const { return raw_; }

 private:
  std::map<std::string, KuRow> raw_;
  LastTouch last_;
};

/// KU vector of one file as seen by a PR: the record at the PR's head commit
/// when known, else the newest record before the PR opened. Nullopt when the
/// file cannot be resolved to parsed content.
std::optional<KuVector> pr_file_kus(const KuStore& store, const PullRequest& pr,
                                    const std::string& path);
/// Sum over the PR's Java files.
KuVector pr_kus(const KuStore& store, const PullRequest& pr);

/// Commits authored strictly before `cutoff`.
Profile dev_exp_matrix(const KuStore& store, Timestamp cutoff);
/// Reviewers of PRs opened strictly before `cutoff`, credited with the KUs of
/// each reviewed PR's Java files.
Profile rev_exp_matrix(const PrDataset& prs, const KuStore& store, Timestamp cutoff);
/// P_ku: development profile over the whole store.
ExpertiseMatrix global_ku_profiles(const KuStore& store);

/// Adds commits in time order as the cutoff advances.
class DevProfileBuilder {
 public:
  explicit DevProfileBuilder(const KuStore& store);
  /// Profile for `cutoff`; rewinds automatically for an earlier cutoff.
  Profile at(Timestamp cutoff);

 private:
  void reset();

  const KuStore& store_;
  std::vector<std::size_t> order_;
  std::size_t next_ = 0;
  Timestamp last_cutoff_ = Timestamp::min();
  ExpertiseAccumulator acc_;
};

class RevProfileBuilder {
 public:
  RevProfileBuilder(const std::vector<PullRequest>& prs, const KuStore& store);
  Profile at(Timestamp cutoff);

 private:
  void reset();

  const KuStore& store_;
  std::vector<const PullRequest*> order_;
  std::vector<KuVector> kus_;
  std::size_t next_ = 0;
  Timestamp last_cutoff_ = Timestamp::min();
  ExpertiseAccumulator acc_;
};

/// Tab-separated matrix with a header row of KU labels.
void write_matrix_tsv(const ExpertiseMatrix& m, const std::filesystem::path& path,
                      const std::vector<std::string>& developers);
void write_last_touch_tsv(const LastTouch& t, const std::filesystem::path& path,
                          const std::vector<std::string>& developers);

}  // namespace kurev
