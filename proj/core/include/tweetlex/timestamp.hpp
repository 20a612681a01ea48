#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tweetlex {

/// A fixed UTC offset, stored in whole minutes east of UTC.
struct UtcOffset {
  std::int32_t minutes = 0;

  constexpr std::chrono::seconds duration() const {
    return std::chrono::seconds{std::int64_t{minutes} * 60};
  }
  friend constexpr bool operator==(UtcOffset, UtcOffset) = default;
};

inline constexpr UtcOffset kIndiaStandardTime{330};

/// Parses "+HH:MM", "-HH:MM", "+HHMM" or "Z".
std::optional<UtcOffset> parse_utc_offset(std::string_view s);
std::string format_utc_offset(UtcOffset off);

using Instant = std::chrono::sys_seconds;

/// Parses an RFC 3339 date-time ("2017-07-04T10:00:00+05:30"). A space may
/// replace the 'T', fractional seconds are truncated, and a missing offset
/// falls back to default_offset.
std::optional<Instant> parse_timestamp(std::string_view s, UtcOffset default_offset);

/// Parses "YYYY-MM-DD".
std::optional<std::chrono::year_month_day> parse_date(std::string_view s);
std::string format_date(std::chrono::year_month_day d);

/// Wall-clock position of an instant in a fixed-offset zone.
struct LocalTime {
  std::chrono::year_month_day date;
  int hour;  // 0..23
};

LocalTime to_local(Instant t, UtcOffset zone);

}  // namespace tweetlex
