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

#include "kurev/metrics.hpp"

#include "kurev/error.hpp"

namespace kurev {
namespace {

void check_k(int k) {
  if (k < 1) throw ParameterError("k must be at least 1, got " + std::to_string(k));
}

void check_inputs(const std::vector<std::vector<std::string>>& rankings,
                  const std::vector<ReviewerSet>& truths, int k) {
  check_k(k);
  if (rankings.empty()) throw ParameterError("no recommendations to score");
  if (rankings.size() != truths.size()) {
    throw ParameterError("rankings and ground truth differ in length");
  }
}

}  // namespace

bool is_correct(const std::vector<std::string>& ranked, const ReviewerSet& truth, int k) {
  check_k(k);
  for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(k); ++i) {
    if (truth.count(ranked[i])) return true;
  }
  return false;
}

double average_precision(const std::vector<std::string>& ranked, const ReviewerSet& truth,
                         int k) {
  check_k(k);
  double sum = 0.0;
  int relevant = 0;
  for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(k); ++i) {
    if (!truth.count(ranked[i])) continue;
    ++relevant;
    sum += static_cast<double>(relevant) / static_cast<double>(i + 1);
  }
  return relevant == 0 ? 0.0 : sum / relevant;
}

double top_k_accuracy(const std::vector<std::vector<std::string>>& rankings,
                      const std::vector<ReviewerSet>& truths, int k) {
  check_inputs(rankings, truths, k);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < rankings.size(); ++i) hits += is_correct(rankings[i], truths[i], k);
  return static_cast<double>(hits) / static_cast<double>(rankings.size());
}

double map_at_k(const std::vector<std::vector<std::string>>& rankings,
                const std::vector<ReviewerSet>& truths, int k) {
  check_inputs(rankings, truths, k);
  double sum = 0.0;
  for (std::size_t i = 0; i < rankings.size(); ++i) {
    sum += average_precision(rankings[i], truths[i], k);
  }
  return sum / static_cast<double>(rankings.size());
}

}  // namespace kurev
