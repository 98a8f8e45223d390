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

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace kurev {

/// A UTC instant with one-second resolution.
class Timestamp {
 public:
  constexpr Timestamp() = default;
  constexpr explicit Timestamp(std::int64_t epoch_seconds)
      : seconds_(epoch_seconds) {}

  static constexpr Timestamp max() {
    return Timestamp(std::numeric_limits<std::int64_t>::max());
  }
  static constexpr Timestamp min() {
    return Timestamp(std::numeric_limits<std::int64_t>::min());
  }

  /// Parses RFC 3339 ("2021-03-04T05:06:07Z", fractional seconds and numeric
  /// offsets accepted; offsets are folded into UTC). Throws DataError.
  static Timestamp parse_rfc3339(std::string_view text);

  /// Builds an instant from a UTC civil date and time of day.
  static Timestamp from_civil(int year, unsigned month, unsigned day,
                              unsigned hour = 0, unsigned minute = 0,
                              unsigned second = 0);

  constexpr std::int64_t epoch_seconds() const { return seconds_; }

  /// Days since 1970-01-01 of the UTC calendar date containing this instant.
  std::int64_t utc_day() const;

  /// Canonical "YYYY-MM-DDTHH:MM:SSZ".
  std::string to_rfc3339() const;

  constexpr Timestamp plus_seconds(std::int64_t s) const {
    return Timestamp(seconds_ + s);
  }
  constexpr Timestamp plus_days(std::int64_t d) const {
    return Timestamp(seconds_ + d * kSecondsPerDay);
  }

  constexpr auto operator<=>(const Timestamp&) const = default;

  static constexpr std::int64_t kSecondsPerDay = 86400;

 private:
  std::int64_t seconds_ = 0;
};

/// Number of UTC calendar-date boundaries between two instants (b - a).
std::int64_t calendar_days_between(Timestamp a, Timestamp b);

}  // namespace kurev
