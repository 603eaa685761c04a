#pragma once

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "droughtcap/date.hpp"
#include "droughtcap/error.hpp"

namespace droughtcap {

enum class Unit { m3_per_s, degC, kPa, percent, W_per_m2, m_per_s, MW, fraction };

inline std::string_view to_string(Unit unit) {
  switch (unit) {
    case Unit::m3_per_s: return "m3_per_s";
    case Unit::degC: return "degC";
    case Unit::kPa: return "kPa";
    case Unit::percent: return "percent";
    case Unit::W_per_m2: return "W_per_m2";
    case Unit::m_per_s: return "m_per_s";
    case Unit::MW: return "MW";
    case Unit::fraction: return "fraction";
  }
  return "?";
}

inline bool requires_non_negative(Unit unit) {
  return unit == Unit::m3_per_s || unit == Unit::W_per_m2 || unit == Unit::m_per_s;
}

/// Gap-free daily time series: values[i] belongs to start + i days.
struct DailySeries {
  Date start{};
  std::vector<double> values;
  Unit unit{Unit::MW};

  [[nodiscard]] std::size_t size() const { return values.size(); }
  [[nodiscard]] bool empty() const { return values.empty(); }
  [[nodiscard]] Date end() const { return start + std::chrono::days{values.size()}; }
  [[nodiscard]] Date last() const { return end() - std::chrono::days{1}; }

  [[nodiscard]] bool covers(const DateRange& range) const {
    return !values.empty() && start <= range.first && range.last < end();
  }

  [[nodiscard]] std::optional<double> at(Date date) const {
    if (date < start || date >= end()) return std::nullopt;
    return values[static_cast<std::size_t>((date - start).count())];
  }

  /// Values for the given range; the range must be covered.
  [[nodiscard]] std::vector<double> slice(const DateRange& range) const {
    const auto offset = static_cast<std::size_t>((range.first - start).count());
    return {values.begin() + static_cast<std::ptrdiff_t>(offset),
            values.begin() + static_cast<std::ptrdiff_t>(offset + range.days())};
  }

  bool operator==(const DailySeries&) const = default;
};

/// Throws InvariantViolation if any value is non-finite, or negative for a
/// unit that must be non-negative.
inline void validate_series(const DailySeries& series, ErrorContext ctx = {}) {
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    const double v = series.values[i];
    ErrorContext at = ctx;
    at.date = format_date(series.start + std::chrono::days{i});
    if (!std::isfinite(v)) throw Error(ErrorKind::InvariantViolation, "non-finite value", at);
    if (requires_non_negative(series.unit) && v < 0.0) {
      throw Error(ErrorKind::InvariantViolation, "negative value for non-negative unit", at);
    }
  }
}

}  // namespace droughtcap
