#pragma once

#include <cmath>

#include "droughtcap/error.hpp"

namespace droughtcap::psychro {

/// Moist-air state at the tower inlet (ambient) and exit.
struct AirState {
  double dry_bulb_c{};
  double wet_bulb_c{};
  double pressure_kpa{};
  double vapor_pressure_kpa{};
  double sat_vapor_pressure_kpa{};
  double humidity_ratio_in{};   // kg/kg
  double humidity_ratio_out{};  // kg/kg
  double enthalpy_in{};         // MJ/kg
  double enthalpy_out{};        // MJ/kg

  [[nodiscard]] double humidity_gap() const { return humidity_ratio_out - humidity_ratio_in; }
};

inline constexpr double kMinTemperatureC = -50.0;
inline constexpr double kMaxTemperatureC = 60.0;
inline constexpr double kMolarMassRatio = 0.6219907;   // kg/kg
inline constexpr double kPsychrometerConstant = 0.000662;  // 1/degC
// Bisection stops once the bracket is this narrow; far inside the 1e-4 degC
// accuracy the recirculating model needs.
inline constexpr double kWetBulbTolerance = 1e-12;
inline constexpr int kWetBulbMaxIterations = 200;

/// Saturation vapor pressure (kPa), Magnus form.
inline double saturation_vapor_pressure(double t_c) {
  if (!(t_c >= kMinTemperatureC && t_c <= kMaxTemperatureC)) {
    throw Error(ErrorKind::OutOfRange, "temperature outside [-50, 60] degC");
  }
  return 0.61094 * std::exp(17.625 * t_c / (t_c + 243.04));
}

inline void check_air_inputs(double rh_pct, double p_tot_kpa) {
  if (!(rh_pct >= 0.0 && rh_pct <= 100.0)) throw Error(ErrorKind::OutOfRange, "relative humidity outside [0, 100]");
  if (!(p_tot_kpa > 0.0)) throw Error(ErrorKind::OutOfRange, "pressure must be > 0");
}

/// Wet-bulb temperature solving T_wb = T_d - (P_ws(T_wb) - P_w) / (K * P_tot)
/// by bisection on [-50, T_d].
inline double wet_bulb_temperature(double t_d, double rh_pct, double p_tot_kpa) {
  check_air_inputs(rh_pct, p_tot_kpa);
  const double p_ws_dry = saturation_vapor_pressure(t_d);
  if (rh_pct == 100.0) return t_d;
  const double p_w = p_ws_dry * (rh_pct / 100.0);
  const double denom = kPsychrometerConstant * p_tot_kpa;
  // Increasing in t; zero at the wet bulb.
  auto residual = [&](double t) { return t - t_d + (saturation_vapor_pressure(t) - p_w) / denom; };

  double lo = kMinTemperatureC;
  double hi = t_d;
  if (residual(lo) > 0.0) throw Error(ErrorKind::NoConvergence, "wet-bulb root not bracketed on [-50, T_d]");
  for (int i = 0; i < kWetBulbMaxIterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= kWetBulbTolerance || mid == lo || mid == hi) return mid;
    if (residual(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw Error(ErrorKind::NoConvergence, "wet-bulb bisection hit iteration cap");
}

inline double humidity_ratio(double vapor_pressure_kpa, double p_tot_kpa) {
  return kMolarMassRatio * vapor_pressure_kpa / (p_tot_kpa - vapor_pressure_kpa);
}

inline double moist_air_enthalpy(double t_d, double humidity_ratio) {
  return t_d * (1.01 + 0.00189 * humidity_ratio) + 2.5 * humidity_ratio;
}

/// Ambient and tower-exit air properties. Exit air is taken saturated at the
/// ambient dry-bulb temperature.
inline AirState air_state(double t_d, double rh_pct, double p_tot_kpa) {
  AirState s;
  s.dry_bulb_c = t_d;
  s.pressure_kpa = p_tot_kpa;
  s.wet_bulb_c = wet_bulb_temperature(t_d, rh_pct, p_tot_kpa);
  s.sat_vapor_pressure_kpa = saturation_vapor_pressure(t_d);
  s.vapor_pressure_kpa = s.sat_vapor_pressure_kpa * (rh_pct / 100.0);
  if (s.sat_vapor_pressure_kpa >= p_tot_kpa) {
    throw Error(ErrorKind::OutOfRange, "saturation vapor pressure exceeds total pressure");
  }
  s.humidity_ratio_in = humidity_ratio(s.vapor_pressure_kpa, p_tot_kpa);
  s.humidity_ratio_out = humidity_ratio(s.sat_vapor_pressure_kpa, p_tot_kpa);
  s.enthalpy_in = moist_air_enthalpy(t_d, s.humidity_ratio_in);
  s.enthalpy_out = moist_air_enthalpy(t_d, s.humidity_ratio_out);
  return s;
}

}  // namespace droughtcap::psychro
