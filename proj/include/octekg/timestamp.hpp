#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace octekg {

// UTC instant with millisecond precision. Totally ordered; the canonical
// text form is `YYYY-MM-DDTHH:MM:SS.sssZ`.
class Timestamp {
 public:
  constexpr Timestamp() = default;

  static constexpr Timestamp from_millis(std::int64_t ms) { return Timestamp(ms); }

  // Accepts ISO-8601 date-times with 'T' or ' ' separator, optional
  // fractional seconds (truncated beyond milliseconds), and an optional
  // offset (`Z`, `+HH:MM`, `+HHMM`, `+HH`); a missing offset means UTC.
  static std::optional<Timestamp> parse(std::string_view text);

  constexpr std::int64_t millis() const { return ms_; }
  std::string to_iso8601() const;

  constexpr auto operator<=>(const Timestamp&) const = default;

 private:
  explicit constexpr Timestamp(std::int64_t ms) : ms_(ms) {}

  std::int64_t ms_ = 0;  // milliseconds since the Unix epoch
};

}  // namespace octekg
