#include "tweetlex/timestamp.hpp"

#include <fmt/format.h>

namespace tweetlex {

namespace {

using namespace std::chrono;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads exactly n digits at s[pos], advancing pos.
std::optional<int> read_digits(std::string_view s, std::size_t& pos, std::size_t n) {
  if (pos + n > s.size()) return std::nullopt;
  int v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char c = s[pos + i];
    if (!is_digit(c)) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  pos += n;
  return v;
}

bool expect(std::string_view s, std::size_t& pos, char c) {
  if (pos < s.size() && s[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

std::optional<year_month_day> read_date(std::string_view s, std::size_t& pos) {
  const auto y = read_digits(s, pos, 4);
  if (!y || !expect(s, pos, '-')) return std::nullopt;
  const auto m = read_digits(s, pos, 2);
  if (!m || !expect(s, pos, '-')) return std::nullopt;
  const auto d = read_digits(s, pos, 2);
  if (!d) return std::nullopt;
  const year_month_day ymd{year{*y}, month{static_cast<unsigned>(*m)},
                           day{static_cast<unsigned>(*d)}};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

}  // namespace

std::optional<UtcOffset> parse_utc_offset(std::string_view s) {
  if (s == "Z" || s == "z") return UtcOffset{0};
  if (s.empty() || (s[0] != '+' && s[0] != '-')) return std::nullopt;
  const int sign = s[0] == '-' ? -1 : 1;
  std::size_t pos = 1;
  const auto hh = read_digits(s, pos, 2);
  if (!hh) return std::nullopt;
  expect(s, pos, ':');
  const auto mm = read_digits(s, pos, 2);
  if (!mm || pos != s.size() || *hh > 23 || *mm > 59) return std::nullopt;
  return UtcOffset{sign * (*hh * 60 + *mm)};
}

std::string format_utc_offset(UtcOffset off) {
  const int abs = off.minutes < 0 ? -off.minutes : off.minutes;
  return fmt::format("{}{:02}:{:02}", off.minutes < 0 ? '-' : '+', abs / 60, abs % 60);
}

std::optional<Instant> parse_timestamp(std::string_view s, UtcOffset default_offset) {
  std::size_t pos = 0;
  const auto date = read_date(s, pos);
  if (!date) return std::nullopt;
  if (pos >= s.size() || (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ')) return std::nullopt;
  ++pos;
  const auto hh = read_digits(s, pos, 2);
  if (!hh || !expect(s, pos, ':')) return std::nullopt;
  const auto mi = read_digits(s, pos, 2);
  if (!mi || !expect(s, pos, ':')) return std::nullopt;
  auto ss = read_digits(s, pos, 2);
  if (!ss || *hh > 23 || *mi > 59 || *ss > 60) return std::nullopt;
  if (*ss == 60) ss = 59;  // leap second
  if (expect(s, pos, '.')) {
    const auto start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos == start) return std::nullopt;
  }
  UtcOffset off = default_offset;
  if (pos < s.size()) {
    const auto parsed = parse_utc_offset(s.substr(pos));
    if (!parsed) return std::nullopt;
    off = *parsed;
  }
  const auto local = sys_days{*date} + hours{*hh} + minutes{*mi} + seconds{*ss};
  return Instant{local - off.duration()};
}

std::optional<year_month_day> parse_date(std::string_view s) {
  std::size_t pos = 0;
  auto d = read_date(s, pos);
  if (!d || pos != s.size()) return std::nullopt;
  return d;
}

std::string format_date(year_month_day d) {
  return fmt::format("{:04}-{:02}-{:02}", static_cast<int>(d.year()),
                     static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
}

LocalTime to_local(Instant t, UtcOffset zone) {
  const auto local = t + zone.duration();
  const auto day = floor<days>(local);
  const auto secs = (local - day).count();
  return {year_month_day{day}, static_cast<int>(secs / 3600)};
}

}  // namespace tweetlex
