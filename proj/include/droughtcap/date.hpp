#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace droughtcap {

/// Calendar day (UTC). Arithmetic is in whole days.
using Date = std::chrono::sys_days;

/// Parses an ISO-8601 calendar date (YYYY-MM-DD). Returns nullopt on any
/// malformed or non-existent date.
inline std::optional<Date> parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    if (i == 4 || i == 7) continue;
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  auto digits = [&](std::size_t from, std::size_t n) {
    int v = 0;
    for (std::size_t i = from; i < from + n; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  y = digits(0, 4);
  m = static_cast<unsigned>(digits(5, 2));
  d = static_cast<unsigned>(digits(8, 2));
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) return std::nullopt;
  return Date{ymd};
}

inline std::string format_date(Date date) {
  const std::chrono::year_month_day ymd{date};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

/// Inclusive span of calendar days.
struct DateRange {
  Date first;
  Date last;

  [[nodiscard]] bool valid() const { return first <= last; }
  [[nodiscard]] std::size_t days() const {
    return valid() ? static_cast<std::size_t>((last - first).count()) + 1 : 0;
  }
  [[nodiscard]] Date at(std::size_t offset) const { return first + std::chrono::days{offset}; }
};

}  // namespace droughtcap
