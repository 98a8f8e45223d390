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

#include <gtest/gtest.h>

#include "kurev/error.hpp"
#include "kurev/timestamp.hpp"

using kurev::Timestamp;

TEST(Timestamp, ParsesUtcAndOffsets) {
  EXPECT_EQ(Timestamp::parse_rfc3339("1970-01-01T00:00:00Z").epoch_seconds(), 0);
  EXPECT_EQ(Timestamp::parse_rfc3339("2021-03-04T05:06:07Z").epoch_seconds(), 1614834367);
  EXPECT_EQ(Timestamp::parse_rfc3339("2021-03-04T07:06:07+02:00"),
            Timestamp::parse_rfc3339("2021-03-04T05:06:07Z"));
  EXPECT_EQ(Timestamp::parse_rfc3339("2021-03-04T05:06:07.999Z").epoch_seconds(), 1614834367);
}

TEST(Timestamp, RejectsMalformedText) {
  EXPECT_THROW(Timestamp::parse_rfc3339("2021-13-01T00:00:00Z"), kurev::DataError);
  EXPECT_THROW(Timestamp::parse_rfc3339("yesterday"), kurev::DataError);
  EXPECT_THROW(Timestamp::parse_rfc3339("2021-02-30T00:00:00Z"), kurev::DataError);
}

TEST(Timestamp, RoundTripsCanonicalForm) {
  const Timestamp t = Timestamp::from_civil(2024, 2, 29, 23, 59, 58);
  EXPECT_EQ(t.to_rfc3339(), "2024-02-29T23:59:58Z");
  EXPECT_EQ(Timestamp::parse_rfc3339(t.to_rfc3339()), t);
}

TEST(Timestamp, CalendarDaysIgnoreTimeOfDay) {
  const Timestamp late = Timestamp::from_civil(2021, 1, 1, 23, 59);
  const Timestamp early = Timestamp::from_civil(2021, 1, 2, 0, 1);
  EXPECT_EQ(kurev::calendar_days_between(late, early), 1);
  EXPECT_EQ(kurev::calendar_days_between(early, early.plus_seconds(3600)), 0);
  EXPECT_EQ(kurev::calendar_days_between(Timestamp::from_civil(2021, 1, 1),
                                         Timestamp::from_civil(2021, 1, 11)),
            10);
}

TEST(Timestamp, DayNumbersBeforeEpoch) {
  EXPECT_EQ(Timestamp(-1).utc_day(), -1);
  EXPECT_EQ(Timestamp(0).utc_day(), 0);
  EXPECT_EQ(Timestamp(86399).utc_day(), 0);
}
