#pragma once

#include <algorithm>

#include "droughtcap/constants.hpp"
#include "droughtcap/error.hpp"
#include "droughtcap/psychrometrics.hpp"

namespace droughtcap::recirc {

struct RecircParams {
  double installed_capacity_mw{};
  double net_efficiency{};
  double heat_sink_fraction{};
  double cycles_of_concentration{6.0};
  double water_air_ratio{0.8};
  double tower_approach_c{5.0};
  double sensible_fraction{0.15};
  double stream_fraction{0.30};
  double latent_heat{constants::latent_heat_vaporization};  // MJ/kg
};

/// Tower water flows, all in m^3/s. makeup == evaporation + blowdown.
struct WaterLosses {
  double evaporation{};
  double blowdown{};
  double makeup{};
  double circulating{};
};

/// Floor applied to (omega_out - omega_in) where it divides.
inline constexpr double kHumidityGapFloor = 1e-6;

inline double heat_rejection_ratio(const RecircParams& p) {
  return (1.0 - p.net_efficiency - p.heat_sink_fraction) / p.net_efficiency;
}

/// Makeup withdrawal (m^3/s) at rated output.
inline double rated_makeup(const RecircParams& p) {
  const double n = p.cycles_of_concentration;
  return n / (n - 1.0) * p.installed_capacity_mw * heat_rejection_ratio(p) *
         (1.0 - p.sensible_fraction) / (constants::water_density * p.latent_heat);
}

inline WaterLosses circulating_flow(const RecircParams& p, double flow_m3s, const psychro::AirState& air) {
  if (flow_m3s < 0.0) throw Error(ErrorKind::NegativeFlow, "streamflow must be >= 0");
  const double gap = std::max(air.humidity_gap(), kHumidityGapFloor);
  const double n = p.cycles_of_concentration;
  const double sigma = p.water_air_ratio;

  WaterLosses w;
  w.circulating = std::min(rated_makeup(p), p.stream_fraction * flow_m3s) * sigma / gap;
  w.makeup = w.circulating / sigma * gap;
  w.evaporation = w.circulating * (n - 1.0) / (sigma * n) * gap;
  w.blowdown = w.circulating / (sigma * n) * gap;
  return w;
}

struct Evaluation {
  WaterLosses losses;
  double cold_water_temp_c{};
  double enthalpy_bracket{};  // MJ/kg of circulating water
  double unclamped_mw{};
  double capacity_mw{};
};

/// Full tower balance for one day. `makeup_water_temp_c` is the river intake
/// temperature.
inline Evaluation evaluate(const RecircParams& p, double flow_m3s, double makeup_water_temp_c,
                           const psychro::AirState& air) {
  Evaluation ev;
  ev.losses = circulating_flow(p, flow_m3s, air);
  ev.cold_water_temp_c = air.wet_bulb_c + p.tower_approach_c;

  // Unfloored gap: saturated air contributes no bracket at all.
  const double gap = air.humidity_gap();
  const double n = p.cycles_of_concentration;
  const double cp = constants::water_heat_capacity;
  ev.enthalpy_bracket = air.enthalpy_out + ev.cold_water_temp_c * cp * gap / n -
                        makeup_water_temp_c * cp * gap - air.enthalpy_in;
  ev.unclamped_mw = constants::water_density * ev.losses.circulating * ev.enthalpy_bracket /
                    (p.water_air_ratio * heat_rejection_ratio(p));
  ev.capacity_mw = ev.enthalpy_bracket <= 0.0 ? 0.0 : std::clamp(ev.unclamped_mw, 0.0, p.installed_capacity_mw);
  return ev;
}

inline double usable_capacity(const RecircParams& p, double flow_m3s, double makeup_water_temp_c,
                              const psychro::AirState& air) {
  return evaluate(p, flow_m3s, makeup_water_temp_c, air).capacity_mw;
}

}  // namespace droughtcap::recirc
