#pragma once

#include <algorithm>

#include "droughtcap/constants.hpp"
#include "droughtcap/error.hpp"
#include "droughtcap/series.hpp"

namespace droughtcap::hydro {

struct HydroParams {
  double head_m{};
  double efficiency{0.90};
  double installed_capacity_mw{};
};

/// Usable capacity (MW) of a conventional hydro plant passing `flow_m3s`:
/// min(eta * rho * Q * g * H / 1e6, P_n).
inline double usable_capacity(const HydroParams& p, double flow_m3s) {
  if (flow_m3s < 0.0) throw Error(ErrorKind::NegativeFlow, "streamflow must be >= 0");
  const double hydraulic_mw =
      p.efficiency * constants::water_density * flow_m3s * constants::gravity * p.head_m / 1.0e6;
  return std::min(hydraulic_mw, p.installed_capacity_mw);
}

/// Flow (m^3/s) at and above which the plant runs at nameplate.
inline double rated_flow(const HydroParams& p) {
  return p.installed_capacity_mw * 1.0e6 /
         (p.efficiency * constants::water_density * constants::gravity * p.head_m);
}

inline DailySeries capacity_series(const HydroParams& p, const DailySeries& flows) {
  DailySeries out{flows.start, {}, Unit::MW};
  out.values.reserve(flows.size());
  for (std::size_t i = 0; i < flows.size(); ++i) {
    try {
      out.values.push_back(usable_capacity(p, flows.values[i]));
    } catch (const Error& e) {
      throw e.annotated({.date = format_date(flows.start + std::chrono::days{i})});
    }
  }
  return out;
}

}  // namespace droughtcap::hydro
