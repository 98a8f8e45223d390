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

#include <set>
#include <string>
#include <vector>

namespace kurev {

using ReviewerSet = std::set<std::string>;

/// 1 when any of the first k entries is a true reviewer.
bool is_correct(const std::vector<std::string>& ranked, const ReviewerSet& truth, int k);

/// AP@k. Position i counts as relevant when ranked[i-1] is in truth; s(i) is
/// the number of relevant positions up to and including i. Zero when no
/// position in the first k is relevant. Throws ParameterError when k < 1.
double average_precision(const std::vector<std::string>& ranked, const ReviewerSet& truth,
                         int k);

/// Fraction of rankings with a hit in the top k. `rankings` and `truths` are
/// parallel. Throws ParameterError on k < 1, empty input or a size mismatch.
double top_k_accuracy(const std::vector<std::vector<std::string>>& rankings,
                      const std::vector<ReviewerSet>& truths, int k);
double map_at_k(const std::vector<std::vector<std::string>>& rankings,
                const std::vector<ReviewerSet>& truths, int k);

inline constexpr int kMaxK = 5;

}  // namespace kurev
