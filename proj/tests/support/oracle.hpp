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

// Straight-line reimplementations used as test oracles. Nothing here shares
// code with the library beyond plain data types.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kurev/history.hpp"
#include "kurev/pull_requests.hpp"

namespace oracle {

using Ranking = std::vector<std::pair<std::string, double>>;

/// Score descending, identity ascending, author removed.
Ranking rank(const std::map<std::string, double>& scores, const std::string& author);

std::int64_t day_number(std::int64_t epoch_seconds);

Ranking cf(const kurev::PullRequest& pr, const std::vector<kurev::CommitRecord>& commits);
Ranking rf(const kurev::PullRequest& pr, const std::vector<kurev::PullRequest>& prs);
Ranking er(const kurev::PullRequest& pr, const std::vector<kurev::CommitRecord>& commits);
Ranking chrev(const kurev::PullRequest& pr, const std::vector<kurev::PullRequest>& prs);

/// KU counts of `path` as the PR sees it, or nothing when unresolvable.
bool file_kus(const kurev::PullRequest& pr, const std::string& path,
              const std::vector<kurev::CommitRecord>& commits,
              const std::vector<kurev::FileKuRecord>& files,
              std::vector<std::uint64_t>& out);

struct KurecParts {
  double dev = 0.0;
  double rev = 0.0;
};

/// Per-candidate DevScore and RevScore recomputed from raw records. Empty
/// when the PR has no KU.
std::map<std::string, KurecParts> kurec(const kurev::PullRequest& pr,
                                        const std::vector<kurev::CommitRecord>& commits,
                                        const std::vector<kurev::FileKuRecord>& files,
                                        const std::vector<kurev::PullRequest>& prs);
Ranking kurec_ranking(const kurev::PullRequest& pr,
                      const std::vector<kurev::CommitRecord>& commits,
                      const std::vector<kurev::FileKuRecord>& files,
                      const std::vector<kurev::PullRequest>& prs);

/// Average precision from precision-at-i over relevant positions.
double average_precision(const std::vector<std::string>& ranked,
                         const std::set<std::string>& truth, int k);
bool hit(const std::vector<std::string>& ranked, const std::set<std::string>& truth, int k);

/// Base kinds in tie order: KUREC, RF, CHREV, ER, CF.
inline const std::vector<std::string> kKinds = {"KUREC", "RF", "CHREV", "ER", "CF"};

/// Index into kKinds of the best performer over PR rankings. rankings[p][i]
/// is kind i's ranked identities for PR p.
std::size_t best_performer(const std::vector<std::vector<std::vector<std::string>>>& rankings,
                           const std::vector<std::set<std::string>>& truths);

}  // namespace oracle
