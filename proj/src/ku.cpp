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

#include "kurev/ku.hpp"

#include <charconv>

#include "kurev/error.hpp"

namespace kurev {
namespace {

constexpr std::array<std::string_view, kKuCount> kTitles = {
    "Data Type",
    "Operator and Decision",
    "Array",
    "Loop",
    "Method and Encapsulation",
    "Inheritance",
    "Advanced Class Design",
    "Generics and Collection",
    "Functional Interface",
    "Stream API",
    "Exception",
    "Date Time API",
    "IO",
    "NIO",
    "String Processing",
    "Concurrency",
    "Database",
    "Localization",
    "Java Persistence",
    "Enterprise Java Bean",
    "Java Message Service API",
    "SOAP Web Service",
    "Servlet",
    "Java REST API",
    "Websocket",
    "Java Server Faces",
    "Contexts and Dependency Injection",
    "Batch Processing",
};

}  // namespace

KuId KuId::of(int index) {
  auto id = try_of(index);
  if (!id) {
    throw ContractViolation("knowledge unit index " + std::to_string(index) +
                            " outside 1..28");
  }
  return *id;
}

std::optional<KuId> KuId::try_of(int index) {
  if (index < 1 || index > kKuCount) return std::nullopt;
  return KuId(index);
}

std::optional<KuId> KuId::parse(std::string_view text) {
  if (!text.empty() && (text.front() == 'K' || text.front() == 'k')) {
    text.remove_prefix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return try_of(value);
}

std::string_view KuId::title() const { return kTitles[slot()]; }

std::uint64_t KuVector::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

int KuVector::present_count() const {
  int n = 0;
  for (auto c : counts) n += c > 0 ? 1 : 0;
  return n;
}

}  // namespace kurev
