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

#ifndef DATESYNTH_CALENDAR_H_
#define DATESYNTH_CALENDAR_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace datesynth {

// Signed seconds since 1970-01-01T00:00:00 UTC.
using Seconds = std::int64_t;

inline constexpr Seconds kSecondsPerDay = 86400;

// Gregorian adoption bounds the supported span from below.
inline constexpr int kMinYear = 1583;
inline constexpr int kMaxYear = 9999;

enum class DateErrorCode {
  kInvalidArgument,
  kTooShort,
  kUnknownMonth,
  kSemanticInvalid,
  kRangeInvalid,
};

const char* ToString(DateErrorCode code);

class DateError : public std::invalid_argument {
 public:
  DateError(DateErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  DateErrorCode code() const { return code_; }

 private:
  DateErrorCode code_;
};

struct CivilDate {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const CivilDate&) const = default;
};

// A single value or an ascending pair (first < *last).
struct PartRange {
  int first = 0;
  std::optional<int> last;

  PartRange() = default;
  PartRange(int value) : first(value) {}  // NOLINT: implicit by intent
  PartRange(int lo, int hi) : first(lo), last(hi) {}

  bool is_range() const { return last.has_value(); }
  int end_value() const { return last.value_or(first); }

  bool operator==(const PartRange&) const = default;
};

// A possibly partial date as read off a page. Month and year are always
// present; the day is absent for month-year expressions.
struct DateParts {
  std::optional<PartRange> day;
  PartRange month;
  int year = 0;
  std::optional<std::string> ordinal_suffix;       // on the first day
  std::optional<std::string> ordinal_suffix_last;  // on a range end

  bool operator==(const DateParts&) const = default;
};

// Half-open [start, end); both bounds are UTC midnights.
struct TimestampRange {
  Seconds start = 0;
  Seconds end = 0;

  bool operator==(const TimestampRange&) const = default;
};

bool is_leap_year(int year);

// Throws DateError(kInvalidArgument) for a month outside [1, 12].
int days_in_month(int month, int year);

// yy < 40 maps into the 21st century, anything else into the 20th.
int resolve_two_digit_year(int yy);

// Case-insensitive unique-prefix lookup with a three letter minimum.
int month_from_name(std::string_view text);
std::optional<int> try_month_from_name(std::string_view text) noexcept;

std::string_view month_full_name(int month);

// The standard English ordinal suffix ("st", "nd", "rd" or "th").
std::string_view ordinal_suffix_for(int day);
bool ordinal_suffix_valid(int day, std::string_view suffix);

bool is_valid(const CivilDate& date);

Seconds civil_to_epoch_midnight(const CivilDate& date);

enum class MidnightPolicy { kStrict, kFloor };

CivilDate epoch_to_civil(Seconds ts,
                         MidnightPolicy policy = MidnightPolicy::kStrict);

// Calendar validation plus interval semantics for partial and ranged dates.
TimestampRange range_of(const DateParts& parts);

// Non-throwing variant for scanning hot paths. On failure |error| (when
// non-null) receives the reason.
std::optional<TimestampRange> try_range_of(const DateParts& parts,
                                           DateErrorCode* error = nullptr);

std::string to_iso(const CivilDate& date);
std::optional<CivilDate> parse_iso(std::string_view text);

}  // namespace datesynth

#endif  // DATESYNTH_CALENDAR_H_
