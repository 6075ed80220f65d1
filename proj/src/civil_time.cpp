// SPDX-License-Identifier: Apache-2.0
#include "occsim/civil_time.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "occsim/error.hpp"

namespace occsim {

namespace {

// Howard Hinnant's civil-calendar algorithms (chrono-compatible).
std::int64_t days_from_civil_impl(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 + static_cast<unsigned>(d) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool parse_int(std::string_view text, int& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::int64_t days_from_civil(const CivilDate& date) {
  return days_from_civil_impl(date.year, date.month, date.day);
}

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : static_cast<unsigned>(-9));
  return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

int weekday_from_days(std::int64_t days) {
  // 1970-01-01 was a Thursday (index 3 with Monday = 0).
  std::int64_t wd = (days + 3) % 7;
  if (wd < 0) wd += 7;
  return static_cast<int>(wd);
}

Minute parse_timestamp(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (text.size() < 16 || text[4] != '-' || text[7] != '-' || (text[10] != ' ' && text[10] != 'T') ||
      text[13] != ':') {
    fail(ErrorCode::UnparseableTimestamp, "expected YYYY-MM-DD HH:MM[:SS], got '" + std::string(text) + "'");
  }
  int year = 0, month = 0, day = 0, hour = 0, min = 0, sec = 0;
  bool ok = parse_int(text.substr(0, 4), year) && parse_int(text.substr(5, 2), month) &&
            parse_int(text.substr(8, 2), day) && parse_int(text.substr(11, 2), hour) &&
            parse_int(text.substr(14, 2), min);
  if (ok && text.size() > 16) {
    ok = text.size() == 19 && text[16] == ':' && parse_int(text.substr(17, 2), sec);
  } else if (ok) {
    ok = text.size() == 16;
  }
  if (!ok || month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || min > 59 || sec > 59) {
    fail(ErrorCode::UnparseableTimestamp, "expected YYYY-MM-DD HH:MM[:SS], got '" + std::string(text) + "'");
  }
  const CivilDate date{year, month, day};
  // Round-trip catches impossible dates such as Feb 30.
  if (civil_from_days(days_from_civil(date)) != date) {
    fail(ErrorCode::UnparseableTimestamp, "no such calendar date: '" + std::string(text) + "'");
  }
  return days_from_civil(date) * kMinutesPerDay + hour * 60 + min;
}

CivilDate parse_date(std::string_view text) {
  const Minute m = parse_timestamp(std::string(text) + " 00:00");
  return civil_from_days(day_of_minute(m));
}

std::string format_date(const CivilDate& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", date.year, date.month, date.day);
  return buf;
}

std::string format_timestamp(Minute minute) {
  const CivilDate date = civil_from_days(day_of_minute(minute));
  const int mod = minute_of_day(minute);
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d", date.year, date.month, date.day, mod / 60,
                mod % 60);
  return buf;
}

CivilDate advance_weekdays(const CivilDate& start, int count) {
  std::int64_t days = days_from_civil(start);
  if (is_weekend(days)) fail(ErrorCode::InvalidArgument, "advance_weekdays start must be a weekday");
  for (int i = 0; i < count; ++i) {
    ++days;
    while (is_weekend(days)) ++days;
  }
  return civil_from_days(days);
}

}  // namespace occsim
