#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "droughtcap/combustion_turbine.hpp"
#include "droughtcap/hydro.hpp"
#include "droughtcap/once_through.hpp"
#include "droughtcap/pv.hpp"
#include "droughtcap/recirc.hpp"
#include "droughtcap/series.hpp"
#include "droughtcap/wind.hpp"

namespace droughtcap {

enum class Technology { Hydro, SteamOnceThrough, SteamRecirculating, CombustionTurbine, SolarPV, Wind, Other };
enum class WaterSource { FreshSurface, Ocean, Ground, Other, None };
enum class Fuel { Coal, NaturalGas, Nuclear, Other, None };

inline constexpr std::array kAllTechnologies{Technology::Hydro,  Technology::SteamOnceThrough,
                                             Technology::SteamRecirculating, Technology::CombustionTurbine,
                                             Technology::SolarPV, Technology::Wind, Technology::Other};

inline std::string_view to_string(Technology t) {
  switch (t) {
    case Technology::Hydro: return "Hydro";
    case Technology::SteamOnceThrough: return "SteamOnceThrough";
    case Technology::SteamRecirculating: return "SteamRecirculating";
    case Technology::CombustionTurbine: return "CombustionTurbine";
    case Technology::SolarPV: return "SolarPV";
    case Technology::Wind: return "Wind";
    case Technology::Other: return "Other";
  }
  return "?";
}

inline std::string_view to_string(WaterSource w) {
  switch (w) {
    case WaterSource::FreshSurface: return "FreshSurface";
    case WaterSource::Ocean: return "Ocean";
    case WaterSource::Ground: return "Ground";
    case WaterSource::Other: return "Other";
    case WaterSource::None: return "None";
  }
  return "?";
}

inline std::string_view to_string(Fuel f) {
  switch (f) {
    case Fuel::Coal: return "Coal";
    case Fuel::NaturalGas: return "NaturalGas";
    case Fuel::Nuclear: return "Nuclear";
    case Fuel::Other: return "Other";
    case Fuel::None: return "None";
  }
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> parse_enum(std::string_view text, const std::array<Enum, N>& values) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

inline std::optional<Technology> parse_technology(std::string_view s) { return parse_enum(s, kAllTechnologies); }
inline std::optional<WaterSource> parse_water_source(std::string_view s) {
  if (s.empty()) return WaterSource::None;
  return parse_enum(s, std::array{WaterSource::FreshSurface, WaterSource::Ocean, WaterSource::Ground,
                                  WaterSource::Other, WaterSource::None});
}
inline std::optional<Fuel> parse_fuel(std::string_view s) {
  if (s.empty()) return Fuel::None;
  return parse_enum(s, std::array{Fuel::Coal, Fuel::NaturalGas, Fuel::Nuclear, Fuel::Other, Fuel::None});
}

namespace defaults {
inline constexpr double stream_fraction = 0.30;
inline constexpr double max_discharge_temp_c = 32.0;
inline constexpr double cycles_of_concentration = 6.0;
inline constexpr double water_air_ratio = 0.8;
inline constexpr double tower_approach_c = 5.0;
inline constexpr double sensible_fraction = 0.15;
inline constexpr double hydro_efficiency = 0.90;
inline constexpr double pv_thermal_coefficient = 0.035;

inline double heat_sink_fraction(Fuel fuel) { return fuel == Fuel::NaturalGas ? 0.20 : 0.12; }
}  // namespace defaults

struct HydroSpec {
  double head_m{};
  double efficiency{defaults::hydro_efficiency};
  bool operator==(const HydroSpec&) const = default;
};

/// Cooling-system parameters shared by once-through and recirculating units.
/// `max_condenser_rise_c` is only required for once-through cooling.
struct ThermalSpec {
  double net_efficiency{};
  double heat_sink_fraction{};
  double max_discharge_temp_c{defaults::max_discharge_temp_c};
  std::optional<double> max_condenser_rise_c;
  double cycles_of_concentration{defaults::cycles_of_concentration};
  double water_air_ratio{defaults::water_air_ratio};
  double tower_approach_c{defaults::tower_approach_c};
  double sensible_fraction{defaults::sensible_fraction};
  double stream_fraction{defaults::stream_fraction};
  bool operator==(const ThermalSpec&) const = default;
};

struct PvSpec {
  double thermal_coefficient{defaults::pv_thermal_coefficient};
  bool operator==(const PvSpec&) const = default;
};

struct WindSpec {
  double hub_height_m{};
  std::string curve_id;
  bool operator==(const WindSpec&) const = default;
};

struct GeneratorRecord {
  std::string id;
  std::string name;
  Technology technology{Technology::Other};
  double installed_capacity_mw{};
  std::string site_id;
  WaterSource water_source{WaterSource::None};
  Fuel fuel{Fuel::None};
  std::optional<HydroSpec> hydro;
  std::optional<ThermalSpec> thermal;
  std::optional<PvSpec> pv;
  std::optional<WindSpec> wind;
  bool operator==(const GeneratorRecord&) const = default;
};

struct SiteHydrology {
  std::string site_id;
  std::optional<DailySeries> streamflow;
  std::optional<DailySeries> water_temperature;
  bool operator==(const SiteHydrology&) const = default;
};

struct SiteWeather {
  std::string site_id;
  std::optional<DailySeries> dry_bulb;
  std::optional<DailySeries> relative_humidity;
  std::optional<DailySeries> pressure;
  std::optional<DailySeries> irradiance;
  std::optional<DailySeries> wind_2m;
  std::optional<DailySeries> wind_10m;
  std::optional<DailySeries> wind_50m;
  bool operator==(const SiteWeather&) const = default;
};

/// Everything needed to derate a fleet. Immutable once loaded.
struct FleetRegistry {
  std::map<std::string, GeneratorRecord> generators;
  std::map<std::string, SiteHydrology> hydrology;
  std::map<std::string, SiteWeather> weather;
  std::map<std::string, wind::WindPowerCurve> wind_curves;
  pv::EfficiencyCoefficients pv_coefficients{pv::kCrystallineSilicon};
  std::map<std::string, pv::EfficiencyCoefficients> pv_overrides;
  bool operator==(const FleetRegistry&) const = default;
};

/// Whether drought conditions can reduce this unit's capacity: thermal units
/// cooled by fresh surface water, plus every hydro, CT, PV and wind unit.
inline bool classify_at_risk(Technology technology, WaterSource water_source) {
  switch (technology) {
    case Technology::SteamOnceThrough:
    case Technology::SteamRecirculating:
      return water_source == WaterSource::FreshSurface;
    case Technology::Hydro:
    case Technology::CombustionTurbine:
    case Technology::SolarPV:
    case Technology::Wind:
      return true;
    case Technology::Other:
      return false;
  }
  return false;
}

inline bool classify_at_risk(const GeneratorRecord& g) { return classify_at_risk(g.technology, g.water_source); }

// Kernel parameter views.

inline hydro::HydroParams hydro_params(const GeneratorRecord& g) {
  return {g.hydro->head_m, g.hydro->efficiency, g.installed_capacity_mw};
}

inline once_through::OnceThroughParams once_through_params(const GeneratorRecord& g) {
  const auto& t = *g.thermal;
  return {g.installed_capacity_mw, t.net_efficiency, t.heat_sink_fraction, t.max_discharge_temp_c,
          t.max_condenser_rise_c.value_or(0.0), t.stream_fraction};
}

inline recirc::RecircParams recirc_params(const GeneratorRecord& g) {
  const auto& t = *g.thermal;
  recirc::RecircParams p;
  p.installed_capacity_mw = g.installed_capacity_mw;
  p.net_efficiency = t.net_efficiency;
  p.heat_sink_fraction = t.heat_sink_fraction;
  p.cycles_of_concentration = t.cycles_of_concentration;
  p.water_air_ratio = t.water_air_ratio;
  p.tower_approach_c = t.tower_approach_c;
  p.sensible_fraction = t.sensible_fraction;
  p.stream_fraction = t.stream_fraction;
  return p;
}

inline ct::CtParams ct_params(const GeneratorRecord& g) { return {.installed_capacity_mw = g.installed_capacity_mw}; }

inline pv::PvParams pv_params(const GeneratorRecord& g, const FleetRegistry& reg) {
  pv::PvParams p;
  p.installed_capacity_mw = g.installed_capacity_mw;
  p.thermal_coefficient = g.pv->thermal_coefficient;
  const auto it = reg.pv_overrides.find(g.id);
  p.coefficients = it != reg.pv_overrides.end() ? it->second : reg.pv_coefficients;
  return p;
}

inline wind::WindParams wind_params(const GeneratorRecord& g) {
  return {g.installed_capacity_mw, g.wind->hub_height_m, g.wind->curve_id};
}

}  // namespace droughtcap
