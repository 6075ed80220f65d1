// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace occsim {

// Naive local wall-clock time: no time zones, no DST correction. All
// timestamps are minutes since 1970-01-01 00:00 (negative values allowed).
using Minute = std::int64_t;

inline constexpr int kMinutesPerDay = 1440;
inline constexpr int kSlotMinutes = 30;
inline constexpr int kSlotsPerDay = kMinutesPerDay / kSlotMinutes;

struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  friend auto operator<=>(const CivilDate&, const CivilDate&) = default;
};

// Days since 1970-01-01 (proleptic Gregorian).
std::int64_t days_from_civil(const CivilDate& date);
CivilDate civil_from_days(std::int64_t days);

// 0 = Monday .. 6 = Sunday.
int weekday_from_days(std::int64_t days);

inline bool is_weekend(std::int64_t days) { return weekday_from_days(days) >= 5; }

inline std::int64_t day_of_minute(Minute minute) {
  // Floor division; minutes may be negative.
  std::int64_t day = minute / kMinutesPerDay;
  if (minute % kMinutesPerDay < 0) --day;
  return day;
}

inline int minute_of_day(Minute minute) {
  return static_cast<int>(minute - day_of_minute(minute) * kMinutesPerDay);
}

// Accepts `YYYY-MM-DD HH:MM[:SS]` and ISO-8601 `YYYY-MM-DDTHH:MM[:SS]`.
// Seconds are truncated toward the containing minute. Throws
// Error(UnparseableTimestamp) on anything else.
Minute parse_timestamp(std::string_view text);

// Accepts `YYYY-MM-DD`.
CivilDate parse_date(std::string_view text);

std::string format_date(const CivilDate& date);
std::string format_timestamp(Minute minute);  // `YYYY-MM-DD HH:MM`

// Calendar date advanced by `count` weekdays, skipping Saturdays and Sundays;
// `start` itself must be a weekday and counts as step zero.
CivilDate advance_weekdays(const CivilDate& start, int count);

}  // namespace occsim
