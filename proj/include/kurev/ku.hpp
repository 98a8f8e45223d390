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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kurev {

inline constexpr int kKuCount = 28;

/// One of the 28 Java knowledge units, K1..K28.
class KuId {
 public:
  /// Throws ContractViolation when index is outside 1..28.
  static KuId of(int index);
  static std::optional<KuId> try_of(int index);
  /// Accepts "K7", "k7" or "7".
  static std::optional<KuId> parse(std::string_view text);
  static constexpr KuId from_slot(std::size_t slot) {
    return KuId(static_cast<int>(slot) + 1);
  }

  constexpr int index() const { return index_; }
  constexpr std::size_t slot() const {
    return static_cast<std::size_t>(index_ - 1);
  }
  std::string label() const { return "K" + std::to_string(index_); }
  std::string_view title() const;

  constexpr auto operator<=>(const KuId&) const = default;

 private:
  constexpr explicit KuId(int index) : index_(index) {}
  int index_;
};

/// Occurrence counts of every KU in one unit of code.
struct KuVector {
  std::array<std::uint64_t, kKuCount> counts{};

  std::uint64_t& operator[](KuId ku) { return counts[ku.slot()]; }
  std::uint64_t operator[](KuId ku) const { return counts[ku.slot()]; }

  KuVector& operator+=(const KuVector& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    return *this;
  }

  std::uint64_t total() const;
  /// Number of KUs with a positive count.
  int present_count() const;
  bool empty() const { return total() == 0; }

  bool operator==(const KuVector&) const = default;
};

}  // namespace kurev
