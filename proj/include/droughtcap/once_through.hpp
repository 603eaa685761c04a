#pragma once

#include <algorithm>
#include <limits>

#include "droughtcap/constants.hpp"
#include "droughtcap/error.hpp"

namespace droughtcap::once_through {

struct OnceThroughParams {
  double installed_capacity_mw{};
  double net_efficiency{};
  double heat_sink_fraction{};
  double max_discharge_temp_c{32.0};
  double max_condenser_rise_c{};
  double stream_fraction{0.30};
};

struct Options {
  // Drop the discharge-temperature limit: headroom is always the full
  // condenser rise.
  bool no_regulatory_limit{false};
};

/// Heat rejected to cooling water per MW of electrical output.
inline double heat_rejection_ratio(const OnceThroughParams& p) {
  return (1.0 - p.net_efficiency - p.heat_sink_fraction) / p.net_efficiency;
}

/// Permissible temperature rise of the cooling water (degC), never negative.
inline double temperature_headroom(const OnceThroughParams& p, double water_temp_c,
                                   Options opts = {}) {
  if (opts.no_regulatory_limit) return p.max_condenser_rise_c;
  return std::max(std::min(p.max_discharge_temp_c - water_temp_c, p.max_condenser_rise_c), 0.0);
}

/// Withdrawal (m^3/s) needed at rated output. +infinity when there is no
/// temperature headroom.
inline double rated_withdrawal(const OnceThroughParams& p, double water_temp_c, Options opts = {}) {
  const double headroom = temperature_headroom(p, water_temp_c, opts);
  if (headroom <= 0.0) return std::numeric_limits<double>::infinity();
  return p.installed_capacity_mw * heat_rejection_ratio(p) /
         (constants::water_density * constants::water_heat_capacity * headroom);
}

/// Usable capacity (MW), clamped to [0, P_n].
inline double usable_capacity(const OnceThroughParams& p, double flow_m3s, double water_temp_c,
                              Options opts = {}) {
  if (flow_m3s < 0.0) throw Error(ErrorKind::NegativeFlow, "streamflow must be >= 0");
  const double headroom = temperature_headroom(p, water_temp_c, opts);
  if (headroom <= 0.0) return 0.0;
  const double available = p.stream_fraction * flow_m3s;
  // Enough water for rated output; skip the round trip through W_on.
  if (available >= rated_withdrawal(p, water_temp_c, opts)) return p.installed_capacity_mw;
  const double capacity = available * constants::water_density * constants::water_heat_capacity * headroom /
                          heat_rejection_ratio(p);
  return std::clamp(capacity, 0.0, p.installed_capacity_mw);
}

}  // namespace droughtcap::once_through
