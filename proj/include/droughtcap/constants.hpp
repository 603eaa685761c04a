#pragma once

namespace droughtcap::constants {

inline constexpr double water_density = 1000.0;          // kg/m^3
inline constexpr double gravity = 9.81;                  // m/s^2
inline constexpr double water_heat_capacity = 4.186e-3;  // MJ/(kg*degC)
inline constexpr double latent_heat_vaporization = 2.45; // MJ/kg

}  // namespace droughtcap::constants
