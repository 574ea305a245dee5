#include "octekg/timestamp.hpp"

#include <array>
#include <cstdio>

namespace octekg {

namespace {

constexpr std::int64_t kMillisPerDay = 86'400'000;

// Days since 1970-01-01 for a proleptic Gregorian civil date.
constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct CivilDate {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

constexpr CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {y + (m <= 2), m, d};
}

constexpr bool is_leap(std::int64_t y) {
  return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
}

constexpr unsigned days_in_month(std::int64_t y, unsigned m) {
  constexpr std::array<unsigned, 12> lengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : lengths[m - 1];
}

bool take_digits(std::string_view& s, int count, std::int64_t& out) {
  if (s.size() < static_cast<std::size_t>(count)) return false;
  std::int64_t value = 0;
  for (int i = 0; i < count; ++i) {
    const char c = s[static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  s.remove_prefix(static_cast<std::size_t>(count));
  out = value;
  return true;
}

bool take_char(std::string_view& s, char expected) {
  if (s.empty() || s.front() != expected) return false;
  s.remove_prefix(1);
  return true;
}

}  // namespace

std::optional<Timestamp> Timestamp::parse(std::string_view s) {
  std::int64_t year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  if (!take_digits(s, 4, year) || !take_char(s, '-') || !take_digits(s, 2, month) ||
      !take_char(s, '-') || !take_digits(s, 2, day)) {
    return std::nullopt;
  }
  if (s.empty() || (s.front() != 'T' && s.front() != 't' && s.front() != ' ')) {
    return std::nullopt;
  }
  s.remove_prefix(1);
  if (!take_digits(s, 2, hour) || !take_char(s, ':') || !take_digits(s, 2, minute) ||
      !take_char(s, ':') || !take_digits(s, 2, second)) {
    return std::nullopt;
  }

  std::int64_t millis = 0;
  if (!s.empty() && s.front() == '.') {
    s.remove_prefix(1);
    int digits = 0;
    while (!s.empty() && s.front() >= '0' && s.front() <= '9') {
      if (digits < 3) millis = millis * 10 + (s.front() - '0');
      s.remove_prefix(1);
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    for (; digits < 3; ++digits) millis *= 10;
  }

  std::int64_t offset_minutes = 0;
  if (!s.empty()) {
    const char c = s.front();
    if (c == 'Z' || c == 'z') {
      s.remove_prefix(1);
    } else if (c == '+' || c == '-') {
      s.remove_prefix(1);
      std::int64_t oh = 0, om = 0;
      if (!take_digits(s, 2, oh)) return std::nullopt;
      if (!s.empty()) {
        if (s.front() == ':') {
          s.remove_prefix(1);
          if (!take_digits(s, 2, om)) return std::nullopt;
        } else if (s.front() >= '0' && s.front() <= '9') {
          if (!take_digits(s, 2, om)) return std::nullopt;
        }
      }
      if (oh > 23 || om > 59) return std::nullopt;
      offset_minutes = (oh * 60 + om) * (c == '-' ? -1 : 1);
    } else {
      return std::nullopt;
    }
  }
  if (!s.empty()) return std::nullopt;

  if (month < 1 || month > 12) return std::nullopt;
  if (day < 1 || day > days_in_month(year, static_cast<unsigned>(month))) return std::nullopt;
  if (hour > 23 || minute > 59 || second > 59) return std::nullopt;

  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                            static_cast<unsigned>(day));
  std::int64_t ms = days * kMillisPerDay +
                    ((hour * 60 + minute) * 60 + second) * 1000 + millis;
  ms -= offset_minutes * 60'000;
  return Timestamp::from_millis(ms);
}

std::string Timestamp::to_iso8601() const {
  std::int64_t days = ms_ / kMillisPerDay;
  std::int64_t rem = ms_ % kMillisPerDay;
  if (rem < 0) {
    rem += kMillisPerDay;
    days -= 1;
  }
  const CivilDate date = civil_from_days(days);
  const auto millis = static_cast<int>(rem % 1000);
  const auto total_seconds = rem / 1000;
  const auto hour = static_cast<int>(total_seconds / 3600);
  const auto minute = static_cast<int>(total_seconds / 60 % 60);
  const auto second = static_cast<int>(total_seconds % 60);

  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02d:%02d:%02d.%03dZ",
                static_cast<long long>(date.year), date.month, date.day, hour,
                minute, second, millis);
  return buf;
}

}  // namespace octekg
