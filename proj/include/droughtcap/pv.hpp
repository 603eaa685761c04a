#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "droughtcap/error.hpp"

namespace droughtcap::pv {

inline constexpr double kStcIrradiance = 1000.0;  // W/m^2
inline constexpr double kStcModuleTemp = 25.0;    // degC

/// Coefficients k1..k6 of the relative-efficiency surface
///   eta = 1 + k1 ln G + k2 ln^2 G + T (k3 + k4 ln G + k5 ln^2 G) + k6 T^2
/// with G normalized to STC irradiance and T the module temperature offset
/// from 25 degC.
using EfficiencyCoefficients = std::array<double, 6>;

/// Crystalline-silicon defaults.
inline constexpr EfficiencyCoefficients kCrystallineSilicon{-0.017237, -0.040465, -0.004702,
                                                            0.000149,  0.000170,  0.000005};

struct PvParams {
  double installed_capacity_mw{};
  double thermal_coefficient{0.035};  // degC m^2 / W
  EfficiencyCoefficients coefficients{kCrystallineSilicon};
};

inline double module_temperature(double t_amb, double irradiance, double c_t) {
  if (irradiance < 0.0) throw Error(ErrorKind::NegativeIrradiance, "irradiance must be >= 0");
  return t_amb + c_t * irradiance;
}

inline double relative_efficiency(double g_norm, double t_delta, const EfficiencyCoefficients& k) {
  if (!(g_norm > 0.0)) throw Error(ErrorKind::NonpositiveIrradiance, "normalized irradiance must be > 0");
  const double lg = std::log(g_norm);
  const double lg2 = lg * lg;
  return 1.0 + k[0] * lg + k[1] * lg2 + t_delta * (k[2] + k[3] * lg + k[4] * lg2) + k[5] * t_delta * t_delta;
}

/// Output (MW) for plane-of-array irradiance `irradiance` and ambient `t_amb`.
inline double power(const PvParams& p, double irradiance, double t_amb) {
  if (irradiance < 0.0) throw Error(ErrorKind::NegativeIrradiance, "irradiance must be >= 0");
  if (irradiance == 0.0) return 0.0;
  const double t_mod = module_temperature(t_amb, irradiance, p.thermal_coefficient);
  const double g_norm = irradiance / kStcIrradiance;
  const double eta = relative_efficiency(g_norm, t_mod - kStcModuleTemp, p.coefficients);
  return std::clamp(p.installed_capacity_mw * g_norm * eta, 0.0, p.installed_capacity_mw);
}

}  // namespace droughtcap::pv
