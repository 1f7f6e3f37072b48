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

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace datesynth {

namespace {

constexpr std::array<std::string_view, 12> kMonthNames = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30,
                                              31, 31, 30, 31, 30, 31};

char Lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Days since 1970-01-01 for a proleptic Gregorian date. The year is shifted
// to start in March so the leap day is the last day of the shifted year.
std::int64_t DaysFromCivil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2 ? 1 : 0;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate CivilFromDays(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return CivilDate{static_cast<int>(y + (m <= 2 ? 1 : 0)),
                   static_cast<int>(m), static_cast<int>(d)};
}

bool Fail(DateErrorCode* out, DateErrorCode code) {
  if (out != nullptr) *out = code;
  return false;
}

bool ValidYear(int year) { return year >= kMinYear && year <= kMaxYear; }

bool ValidDay(int day, int month, int year) {
  return day >= 1 && day <= days_in_month(month, year);
}

}  // namespace

const char* ToString(DateErrorCode code) {
  switch (code) {
    case DateErrorCode::kInvalidArgument:
      return "invalid-argument";
    case DateErrorCode::kTooShort:
      return "too-short";
    case DateErrorCode::kUnknownMonth:
      return "unknown-month";
    case DateErrorCode::kSemanticInvalid:
      return "semantic-invalid";
    case DateErrorCode::kRangeInvalid:
      return "range-invalid";
  }
  return "unknown";
}

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int month, int year) {
  if (month < 1 || month > 12) {
    throw DateError(DateErrorCode::kInvalidArgument,
                    "month out of range: " + std::to_string(month));
  }
  if (month == 2 && is_leap_year(year)) return 29;
  return kDaysInMonth[month - 1];
}

int resolve_two_digit_year(int yy) {
  if (yy < 0 || yy > 99) {
    throw DateError(DateErrorCode::kInvalidArgument,
                    "two digit year out of range: " + std::to_string(yy));
  }
  return yy < 40 ? 2000 + yy : 1900 + yy;
}

std::optional<int> try_month_from_name(std::string_view text) noexcept {
  if (text.size() < 3) return std::nullopt;
  std::optional<int> found;
  for (int m = 0; m < 12; ++m) {
    const std::string_view name = kMonthNames[m];
    if (text.size() > name.size()) continue;
    bool prefix = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (Lower(text[i]) != Lower(name[i])) {
        prefix = false;
        break;
      }
    }
    if (!prefix) continue;
    if (found.has_value()) return std::nullopt;
    found = m + 1;
  }
  return found;
}

int month_from_name(std::string_view text) {
  if (text.size() < 3) {
    throw DateError(DateErrorCode::kTooShort,
                    "month name shorter than 3 letters: " + std::string(text));
  }
  const auto month = try_month_from_name(text);
  if (!month) {
    throw DateError(DateErrorCode::kUnknownMonth,
                    "not a month name: " + std::string(text));
  }
  return *month;
}

std::string_view month_full_name(int month) {
  if (month < 1 || month > 12) {
    throw DateError(DateErrorCode::kInvalidArgument,
                    "month out of range: " + std::to_string(month));
  }
  return kMonthNames[month - 1];
}

std::string_view ordinal_suffix_for(int day) {
  const int mod100 = day % 100;
  if (mod100 >= 11 && mod100 <= 13) return "th";
  switch (day % 10) {
    case 1:
      return "st";
    case 2:
      return "nd";
    case 3:
      return "rd";
    default:
      return "th";
  }
}

bool ordinal_suffix_valid(int day, std::string_view suffix) {
  if (suffix.size() != 2) return false;
  const std::string_view expected = ordinal_suffix_for(day);
  return Lower(suffix[0]) == expected[0] && Lower(suffix[1]) == expected[1];
}

bool is_valid(const CivilDate& date) {
  return ValidYear(date.year) && date.month >= 1 && date.month <= 12 &&
         ValidDay(date.day, date.month, date.year);
}

Seconds civil_to_epoch_midnight(const CivilDate& date) {
  if (!is_valid(date)) {
    throw DateError(DateErrorCode::kSemanticInvalid,
                    "invalid civil date: " + to_iso(date));
  }
  return DaysFromCivil(date.year, static_cast<unsigned>(date.month),
                       static_cast<unsigned>(date.day)) *
         kSecondsPerDay;
}

CivilDate epoch_to_civil(Seconds ts, MidnightPolicy policy) {
  std::int64_t days = ts / kSecondsPerDay;
  if (ts % kSecondsPerDay != 0) {
    if (policy == MidnightPolicy::kStrict) {
      throw DateError(DateErrorCode::kInvalidArgument,
                      "timestamp is not a UTC midnight: " +
                          std::to_string(ts));
    }
    if (ts < 0) --days;
  }
  const CivilDate date = CivilFromDays(days);
  if (!ValidYear(date.year)) {
    throw DateError(DateErrorCode::kInvalidArgument,
                    "timestamp outside the supported year span: " +
                        std::to_string(ts));
  }
  return date;
}

std::optional<TimestampRange> try_range_of(const DateParts& parts,
                                           DateErrorCode* error) {
  const bool day_range = parts.day && parts.day->is_range();
  const bool month_range = parts.month.is_range();
  if (day_range && month_range) {
    Fail(error, DateErrorCode::kRangeInvalid);
    return std::nullopt;
  }
  // A fixed day against a span of months has no interval reading.
  if (parts.day && month_range) {
    Fail(error, DateErrorCode::kRangeInvalid);
    return std::nullopt;
  }
  if (!ValidYear(parts.year)) {
    Fail(error, DateErrorCode::kSemanticInvalid);
    return std::nullopt;
  }
  const int m1 = parts.month.first;
  const int m2 = parts.month.end_value();
  if (m1 < 1 || m1 > 12 || m2 < 1 || m2 > 12) {
    Fail(error, DateErrorCode::kSemanticInvalid);
    return std::nullopt;
  }
  if (month_range && m1 >= m2) {
    Fail(error, DateErrorCode::kRangeInvalid);
    return std::nullopt;
  }

  if (!parts.day) {
    const Seconds start =
        DaysFromCivil(parts.year, static_cast<unsigned>(m1), 1) *
        kSecondsPerDay;
    const int next_month = m2 == 12 ? 1 : m2 + 1;
    const int next_year = m2 == 12 ? parts.year + 1 : parts.year;
    const Seconds end =
        DaysFromCivil(next_year, static_cast<unsigned>(next_month), 1) *
        kSecondsPerDay;
    return TimestampRange{start, end};
  }

  const int d1 = parts.day->first;
  const int d2 = parts.day->end_value();
  if (!ValidDay(d1, m1, parts.year) || !ValidDay(d2, m1, parts.year)) {
    Fail(error, DateErrorCode::kSemanticInvalid);
    return std::nullopt;
  }
  if (day_range && d1 >= d2) {
    Fail(error, DateErrorCode::kRangeInvalid);
    return std::nullopt;
  }
  if (parts.ordinal_suffix && !ordinal_suffix_valid(d1, *parts.ordinal_suffix)) {
    Fail(error, DateErrorCode::kSemanticInvalid);
    return std::nullopt;
  }
  if (parts.ordinal_suffix_last &&
      !ordinal_suffix_valid(d2, *parts.ordinal_suffix_last)) {
    Fail(error, DateErrorCode::kSemanticInvalid);
    return std::nullopt;
  }
  const Seconds start = DaysFromCivil(parts.year, static_cast<unsigned>(m1),
                                      static_cast<unsigned>(d1)) *
                        kSecondsPerDay;
  const Seconds end = DaysFromCivil(parts.year, static_cast<unsigned>(m1),
                                    static_cast<unsigned>(d2)) *
                          kSecondsPerDay +
                      kSecondsPerDay;
  return TimestampRange{start, end};
}

TimestampRange range_of(const DateParts& parts) {
  DateErrorCode code = DateErrorCode::kSemanticInvalid;
  const auto range = try_range_of(parts, &code);
  if (!range) {
    throw DateError(code, std::string("date parts rejected: ") +
                              ToString(code));
  }
  return *range;
}

std::string to_iso(const CivilDate& date) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", date.year, date.month,
                date.day);
  return buf;
}

std::optional<CivilDate> parse_iso(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    return std::nullopt;
  }
  auto field = [&](std::size_t pos, std::size_t len) -> std::optional<int> {
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = first + len;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
  };
  const auto y = field(0, 4);
  const auto m = field(5, 2);
  const auto d = field(8, 2);
  if (!y || !m || !d) return std::nullopt;
  const CivilDate date{*y, *m, *d};
  if (!is_valid(date)) return std::nullopt;
  return date;
}

}  // namespace datesynth
