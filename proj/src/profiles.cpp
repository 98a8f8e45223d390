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

#include "kurev/profiles.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "kurev/error.hpp"
#include "kurev/log.hpp"

namespace kurev {

ExpertiseMatrix::ExpertiseMatrix(ExpertiseKind kind, Timestamp cutoff,
                                 std::map<std::string, KuRow> rows)
    : kind_(kind), cutoff_(cutoff) {
  for (auto& [dev, row] : rows) {
    index_[dev] = developers_.size();
    developers_.push_back(dev);
    values_.push_back(row);
  }
}

bool ExpertiseMatrix::has(const std::string& developer) const {
  return index_.count(developer) > 0;
}

const KuRow* ExpertiseMatrix::row(const std::string& developer) const {
  auto it = index_.find(developer);
  return it == index_.end() ? nullptr : &values_[it->second];
}

double ExpertiseMatrix::value(const std::string& developer, KuId ku) const {
  const KuRow* r = row(developer);
  return r == nullptr ? 0.0 : (*r)[ku.slot()];
}

void LastTouch::touch(const std::string& developer, KuId ku, Timestamp when) {
  auto& slot = entries_[developer][ku.slot()];
  if (!slot || *slot < when) slot = when;
}

std::optional<Timestamp> LastTouch::get(const std::string& developer, KuId ku) const {
  auto it = entries_.find(developer);
  if (it == entries_.end()) return std::nullopt;
  return it->second[ku.slot()];
}

void ExpertiseAccumulator::add(const std::string& developer, const KuVector& counts,
                               Timestamp when) {
  KuRow& row = raw_[developer];
  for (int k = 0; k < kKuCount; ++k) {
    const auto c = counts.counts[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    row[static_cast<std::size_t>(k)] += static_cast<double>(c);
    last_.touch(developer, KuId::from_slot(static_cast<std::size_t>(k)), when);
  }
}

Profile ExpertiseAccumulator::finish(ExpertiseKind kind, Timestamp cutoff) const {
  KuRow totals{};
  for (const auto& [dev, row] : raw_) {
    for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += row[k];
  }
  std::map<std::string, KuRow> rows;
  for (const auto& [dev, row] : raw_) {
    KuRow out{};
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = totals[k] > 0 ? row[k] / totals[k] : 0.0;
    }
    rows.emplace(dev, out);
  }
  return {ExpertiseMatrix(kind, cutoff, std::move(rows)), last_};
}

std::optional<KuVector> pr_file_kus(const KuStore& store, const PullRequest& pr,
                                    const std::string& path) {
  const FileKuRecord* rec = nullptr;
  if (pr.head_commit) {
    if (const CommitRecord* head = store.commit(*pr.head_commit)) {
      rec = store.file(head->hash, path);
      if (rec == nullptr) rec = store.latest_before(path, head->authored_at.plus_seconds(1));
    }
  }
  if (rec == nullptr) rec = store.latest_before(path, pr.opened_at);
  if (rec == nullptr || rec->status != FileStatus::kOk) return std::nullopt;
  return rec->vector;
}

KuVector pr_kus(const KuStore& store, const PullRequest& pr) {
  KuVector total;
  for (const auto& f : pr.java_files()) {
    if (auto v = pr_file_kus(store, pr, f)) total += *v;
  }
  return total;
}

Profile dev_exp_matrix(const KuStore& store, Timestamp cutoff) {
  ExpertiseAccumulator acc;
  for (const auto& c : store.commits()) {
    if (c.authored_at >= cutoff) continue;
    KuVector sum;
    for (const auto* f : store.files_of(c.hash)) {
      if (f->vector) sum += *f->vector;
    }
    acc.add(c.author, sum, c.authored_at);
  }
  return acc.finish(ExpertiseKind::kDevelopment, cutoff);
}

Profile rev_exp_matrix(const PrDataset& prs, const KuStore& store, Timestamp cutoff) {
  ExpertiseAccumulator acc;
  for (const auto& pr : prs.prs) {
    if (pr.opened_at >= cutoff) continue;
    const KuVector v = pr_kus(store, pr);
    for (const auto& r : pr.reviewers) acc.add(r, v, pr.opened_at);
  }
  return acc.finish(ExpertiseKind::kReview, cutoff);
}

ExpertiseMatrix global_ku_profiles(const KuStore& store) {
  return dev_exp_matrix(store, Timestamp::max()).matrix;
}

DevProfileBuilder::DevProfileBuilder(const KuStore& store) : store_(store) {
  order_.resize(store.commits().size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return store.commits()[a].authored_at < store.commits()[b].authored_at;
  });
}

void DevProfileBuilder::reset() {
  next_ = 0;
  acc_ = ExpertiseAccumulator();
}

Profile DevProfileBuilder::at(Timestamp cutoff) {
  if (cutoff < last_cutoff_) reset();
  last_cutoff_ = cutoff;
  while (next_ < order_.size() && store_.commits()[order_[next_]].authored_at < cutoff) {
    const auto& c = store_.commits()[order_[next_]];
    KuVector sum;
    for (const auto* f : store_.files_of(c.hash)) {
      if (f->vector) sum += *f->vector;
    }
    acc_.add(c.author, sum, c.authored_at);
    ++next_;
  }
  return acc_.finish(ExpertiseKind::kDevelopment, cutoff);
}

RevProfileBuilder::RevProfileBuilder(const std::vector<PullRequest>& prs, const KuStore& store)
    : store_(store) {
  for (const auto& pr : prs) order_.push_back(&pr);
  std::stable_sort(order_.begin(), order_.end(),
                   [](const auto* a, const auto* b) { return a->opened_at < b->opened_at; });
  for (const auto* pr : order_) kus_.push_back(pr_kus(store_, *pr));
}

void RevProfileBuilder::reset() {
  next_ = 0;
  acc_ = ExpertiseAccumulator();
}

Profile RevProfileBuilder::at(Timestamp cutoff) {
  if (cutoff < last_cutoff_) reset();
  last_cutoff_ = cutoff;
  while (next_ < order_.size() && order_[next_]->opened_at < cutoff) {
    for (const auto& r : order_[next_]->reviewers) {
      acc_.add(r, kus_[next_], order_[next_]->opened_at);
    }
    ++next_;
  }
  return acc_.finish(ExpertiseKind::kReview, cutoff);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SetupError("cannot write " + path.string());
  return out;
}

void write_header(std::ofstream& out) {
  out << "developer";
  for (int k = 1; k <= kKuCount; ++k) out << "\tK" << k;
  out << '\n';
}

}  // namespace

void write_matrix_tsv(const ExpertiseMatrix& m, const std::filesystem::path& path,
                      const std::vector<std::string>& developers) {
  auto out = open_out(path);
  write_header(out);
  char buf[40];
  for (const auto& dev : developers) {
    out << dev;
    for (int k = 1; k <= kKuCount; ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", m.value(dev, KuId::of(k)));
      out << '\t' << buf;
    }
    out << '\n';
  }
}

void write_last_touch_tsv(const LastTouch& t, const std::filesystem::path& path,
                          const std::vector<std::string>& developers) {
  auto out = open_out(path);
  write_header(out);
  for (const auto& dev : developers) {
    out << dev;
    for (int k = 1; k <= kKuCount; ++k) {
      const auto when = t.get(dev, KuId::of(k));
      out << '\t' << (when ? when->to_rfc3339() : "-");
    }
    out << '\n';
  }
}

}  // namespace kurev
