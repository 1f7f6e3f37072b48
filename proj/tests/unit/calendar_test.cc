// Copyright 2026 The Datesynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "datesynth/calendar.h"

#include <gtest/gtest.h>

namespace datesynth {
namespace {

TEST(Calendar, LeapYears) {
  EXPECT_FALSE(is_leap_year(1900));
  EXPECT_TRUE(is_leap_year(2000));
  EXPECT_TRUE(is_leap_year(2024));
  EXPECT_FALSE(is_leap_year(2023));
  EXPECT_FALSE(is_leap_year(2100));
}

TEST(Calendar, DaysInMonth) {
  EXPECT_EQ(days_in_month(2, 1900), 28);
  EXPECT_EQ(days_in_month(2, 2000), 29);
  EXPECT_EQ(days_in_month(4, 2001), 30);
  EXPECT_EQ(days_in_month(12, 2001), 31);
  EXPECT_THROW(days_in_month(13, 2001), DateError);
}

TEST(Calendar, EpochMidnights) {
  EXPECT_EQ(civil_to_epoch_midnight({1970, 1, 1}), 0);
  EXPECT_EQ(civil_to_epoch_midnight({1969, 12, 31}), -86400);
  EXPECT_EQ(civil_to_epoch_midnight({2001, 2, 1}), 980985600);
  EXPECT_EQ(civil_to_epoch_midnight({1900, 1, 1}), -2208988800);
  EXPECT_EQ(civil_to_epoch_midnight({2100, 12, 31}), 4133894400);
  EXPECT_THROW(civil_to_epoch_midnight({2001, 2, 29}), DateError);
}

TEST(Calendar, EpochToCivilRejectsNonMidnightUnlessFloored) {
  EXPECT_EQ(epoch_to_civil(-86400), (CivilDate{1969, 12, 31}));
  EXPECT_THROW(epoch_to_civil(1), DateError);
  EXPECT_EQ(epoch_to_civil(-1, MidnightPolicy::kFloor),
            (CivilDate{1969, 12, 31}));
  EXPECT_EQ(epoch_to_civil(86399, MidnightPolicy::kFloor),
            (CivilDate{1970, 1, 1}));
}

TEST(Calendar, TwoDigitPivot) {
  EXPECT_EQ(resolve_two_digit_year(0), 2000);
  EXPECT_EQ(resolve_two_digit_year(39), 2039);
  EXPECT_EQ(resolve_two_digit_year(40), 1940);
  EXPECT_EQ(resolve_two_digit_year(98), 1998);
}

TEST(Calendar, MonthNames) {
  EXPECT_EQ(month_from_name("Febr"), 2);
  EXPECT_EQ(month_from_name("JUNE"), 6);
  EXPECT_EQ(month_from_name("sept"), 9);
  EXPECT_EQ(month_full_name(3), "March");
  try {
    month_from_name("Ma");
    FAIL();
  } catch (const DateError& e) {
    EXPECT_EQ(e.code(), DateErrorCode::kTooShort);
  }
  try {
    month_from_name("Xyz");
    FAIL();
  } catch (const DateError& e) {
    EXPECT_EQ(e.code(), DateErrorCode::kUnknownMonth);
  }
  EXPECT_FALSE(try_month_from_name("Juno").has_value());
}

TEST(Calendar, OrdinalSuffixes) {
  EXPECT_EQ(ordinal_suffix_for(1), "st");
  EXPECT_EQ(ordinal_suffix_for(2), "nd");
  EXPECT_EQ(ordinal_suffix_for(3), "rd");
  EXPECT_EQ(ordinal_suffix_for(11), "th");
  EXPECT_EQ(ordinal_suffix_for(12), "th");
  EXPECT_EQ(ordinal_suffix_for(22), "nd");
  EXPECT_TRUE(ordinal_suffix_valid(31, "ST"));
  EXPECT_FALSE(ordinal_suffix_valid(2, "th"));
}

TEST(Calendar, RangeOfSingleDay) {
  DateParts p;
  p.day = 1;
  p.month = 2;
  p.year = 2001;
  const TimestampRange r = range_of(p);
  EXPECT_EQ(r.start, 980985600);
  EXPECT_EQ(r.end, 980985600 + 86400);
}

TEST(Calendar, RangeOfMonthYear) {
  DateParts p;
  p.month = 1;
  p.year = 2010;
  const TimestampRange r = range_of(p);
  EXPECT_EQ(r.start, civil_to_epoch_midnight({2010, 1, 1}));
  EXPECT_EQ(r.end, civil_to_epoch_midnight({2010, 2, 1}));
}

TEST(Calendar, RangeOfDecemberRollsOverYear) {
  DateParts p;
  p.month = 12;
  p.year = 1999;
  EXPECT_EQ(range_of(p).end, civil_to_epoch_midnight({2000, 1, 1}));
}

TEST(Calendar, RangeOfDayRangeIsInclusiveOfLastDay) {
  DateParts p;
  p.day = PartRange(1, 2);
  p.month = 1;
  p.year = 1990;
  const TimestampRange r = range_of(p);
  EXPECT_EQ(r.start, civil_to_epoch_midnight({1990, 1, 1}));
  EXPECT_EQ(r.end, civil_to_epoch_midnight({1990, 1, 3}));
}

TEST(Calendar, RangeOfMonthRange) {
  DateParts p;
  p.month = PartRange(3, 6);
  p.year = 2002;
  const TimestampRange r = range_of(p);
  EXPECT_EQ(r.start, civil_to_epoch_midnight({2002, 3, 1}));
  EXPECT_EQ(r.end, civil_to_epoch_midnight({2002, 7, 1}));
}

TEST(Calendar, RangeOfRejectsDoubleAndDescendingRanges) {
  DateParts p;
  p.day = PartRange(1, 3);
  p.month = PartRange(5, 6);
  p.year = 2001;
  DateErrorCode code{};
  EXPECT_FALSE(try_range_of(p, &code).has_value());
  EXPECT_EQ(code, DateErrorCode::kRangeInvalid);

  DateParts q;
  q.day = PartRange(3, 1);
  q.month = 5;
  q.year = 2001;
  EXPECT_FALSE(try_range_of(q, &code).has_value());
  EXPECT_EQ(code, DateErrorCode::kRangeInvalid);
}

TEST(Calendar, RangeOfRejectsImpossibleDates) {
  DateParts p;
  p.day = 31;
  p.month = 2;
  p.year = 2001;
  DateErrorCode code{};
  EXPECT_FALSE(try_range_of(p, &code).has_value());
  EXPECT_EQ(code, DateErrorCode::kSemanticInvalid);
  p.day = 29;
  EXPECT_FALSE(try_range_of(p).has_value());
  p.year = 2000;
  EXPECT_TRUE(try_range_of(p).has_value());
  EXPECT_THROW(range_of(DateParts{std::nullopt, 13, 2001, {}, {}}), DateError);
}

TEST(Calendar, RangeOfChecksOrdinalSuffix) {
  DateParts p;
  p.day = 2;
  p.month = 6;
  p.year = 1996;
  p.ordinal_suffix = "th";
  EXPECT_FALSE(try_range_of(p).has_value());
  p.ordinal_suffix = "nd";
  EXPECT_TRUE(try_range_of(p).has_value());
}

TEST(Calendar, IsoRoundTrip) {
  EXPECT_EQ(to_iso({1998, 4, 3}), "1998-04-03");
  EXPECT_EQ(parse_iso("1998-04-03"), (CivilDate{1998, 4, 3}));
  EXPECT_FALSE(parse_iso("1998-02-30").has_value());
  EXPECT_FALSE(parse_iso("1998/04/03").has_value());
  EXPECT_FALSE(parse_iso("98-04-03").has_value());
}

}  // namespace
}  // namespace datesynth
