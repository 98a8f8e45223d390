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

#include "kurev/timestamp.hpp"

#include <chrono>

#include <cstdio>

#include "kurev/error.hpp"

namespace kurev {
namespace {

// Proleptic Gregorian conversions (H. Hinnant's civil date algorithms).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m,
                     unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp < 10 ? mp + 3 : mp - 9;
  y += m <= 2;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

[[noreturn]] void bad_timestamp(std::string_view text, const char* why) {
  throw DataError("invalid RFC 3339 timestamp '" + std::string(text) +
                  "': " + why);
}

unsigned read_digits(std::string_view text, std::size_t& pos, int count) {
  unsigned value = 0;
  for (int i = 0; i < count; ++i, ++pos) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
      bad_timestamp(text, "expected digit");
    }
    value = value * 10 + static_cast<unsigned>(text[pos] - '0');
  }
  return value;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    bad_timestamp(text, "unexpected character");
  }
  ++pos;
}

}  // namespace

Timestamp Timestamp::from_civil(int year, unsigned month, unsigned day,
                                unsigned hour, unsigned minute,
                                unsigned second) {
  return Timestamp(days_from_civil(year, month, day) * kSecondsPerDay +
                   hour * 3600 + minute * 60 + second);
}

Timestamp Timestamp::parse_rfc3339(std::string_view text) {
  std::size_t pos = 0;
  const unsigned year = read_digits(text, pos, 4);
  expect_char(text, pos, '-');
  const unsigned month = read_digits(text, pos, 2);
  expect_char(text, pos, '-');
  const unsigned day = read_digits(text, pos, 2);
  if (pos >= text.size() || (text[pos] != 'T' && text[pos] != 't' &&
                             text[pos] != ' ')) {
    bad_timestamp(text, "missing time part");
  }
  ++pos;
  const unsigned hour = read_digits(text, pos, 2);
  expect_char(text, pos, ':');
  const unsigned minute = read_digits(text, pos, 2);
  expect_char(text, pos, ':');
  const unsigned second = read_digits(text, pos, 2);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60) {
    bad_timestamp(text, "field out of range");
  }
  const std::chrono::year_month_day date{std::chrono::year(static_cast<int>(year)),
                                         std::chrono::month(month), std::chrono::day(day)};
  if (!date.ok()) bad_timestamp(text, "no such calendar date");
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) bad_timestamp(text, "empty fraction");
  }
  if (pos >= text.size()) bad_timestamp(text, "missing offset");
  std::int64_t offset = 0;
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else if (text[pos] == '+' || text[pos] == '-') {
    const int sign = text[pos] == '+' ? 1 : -1;
    ++pos;
    const unsigned oh = read_digits(text, pos, 2);
    expect_char(text, pos, ':');
    const unsigned om = read_digits(text, pos, 2);
    offset = sign * static_cast<std::int64_t>(oh * 3600 + om * 60);
  } else {
    bad_timestamp(text, "bad offset");
  }
  if (pos != text.size()) bad_timestamp(text, "trailing characters");
  const Timestamp local =
      from_civil(static_cast<int>(year), month, day, hour, minute, second);
  return Timestamp(local.epoch_seconds() - offset);
}

std::int64_t Timestamp::utc_day() const {
  return floor_div(seconds_, kSecondsPerDay);
}

std::string Timestamp::to_rfc3339() const {
  const std::int64_t days = utc_day();
  const std::int64_t rem = seconds_ - days * kSecondsPerDay;
  std::int64_t y = 0;
  unsigned m = 0;
  unsigned d = 0;
  civil_from_days(days, y, m, d);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem % 3600) / 60),
                static_cast<long long>(rem % 60));
  return buf;
}

std::int64_t calendar_days_between(Timestamp a, Timestamp b) {
  return b.utc_day() - a.utc_day();
}

}  // namespace kurev
