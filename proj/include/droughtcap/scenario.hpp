#pragma once

#include <cmath>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "droughtcap/csv.hpp"
#include "droughtcap/fleet.hpp"

namespace droughtcap::scenario {

inline constexpr double kDefaultWaterTempResponse = 0.6;  // degC water per degC air

/// Perturbation applied to one site's inputs. Water temperature follows air
/// temperature linearly and, optionally, ln(streamflow scale).
struct Scenario {
  std::string name;
  double air_temp_delta_c{0.0};
  double streamflow_scale{1.0};
  double water_temp_response{kDefaultWaterTempResponse};
  double water_temp_flow_response{0.0};
  bool operator==(const Scenario&) const = default;
};

inline void validate(const Scenario& s) {
  if (s.name.empty()) throw Error(ErrorKind::InvariantViolation, "scenario name must be nonempty");
  if (s.name == "." || s.name == ".." || s.name.find_first_of("/\\") != std::string::npos) {
    throw Error(ErrorKind::InvariantViolation, "scenario name '" + s.name + "' is not usable as a directory name");
  }
  if (!(s.streamflow_scale > 0.0 && s.streamflow_scale <= 1.5)) {
    throw Error(ErrorKind::InvariantViolation, fmt::format("streamflow_scale {} outside (0, 1.5]", s.streamflow_scale),
                {.field = "streamflow_scale"});
  }
  if (!std::isfinite(s.air_temp_delta_c) || !std::isfinite(s.water_temp_response) ||
      !std::isfinite(s.water_temp_flow_response)) {
    throw Error(ErrorKind::InvariantViolation, "scenario " + s.name + " has a non-finite parameter");
  }
}

inline double water_temp_shift(const Scenario& s) {
  return s.water_temp_response * s.air_temp_delta_c + s.water_temp_flow_response * std::log(s.streamflow_scale);
}

inline void perturb(SiteWeather& w, const Scenario& s) {
  if (w.dry_bulb) {
    for (double& v : w.dry_bulb->values) v += s.air_temp_delta_c;
  }
}

inline void perturb(SiteHydrology& h, const Scenario& s) {
  if (h.streamflow) {
    for (double& v : h.streamflow->values) v *= s.streamflow_scale;
  }
  if (h.water_temperature) {
    const double shift = water_temp_shift(s);
    for (double& v : h.water_temperature->values) v += shift;
  }
}

/// Returns perturbed copies; channels a scenario does not touch are copied
/// unchanged.
inline std::pair<SiteWeather, SiteHydrology> apply(const SiteWeather& weather, const SiteHydrology& hydrology,
                                                   const Scenario& s) {
  std::pair<SiteWeather, SiteHydrology> out{weather, hydrology};
  perturb(out.first, s);
  perturb(out.second, s);
  return out;
}

/// Applies `s` to every site of a registry.
inline FleetRegistry apply(const FleetRegistry& reg, const Scenario& s) {
  FleetRegistry out = reg;
  for (auto& [site, w] : out.weather) perturb(w, s);
  for (auto& [site, h] : out.hydrology) perturb(h, s);
  return out;
}

/// Baseline, +1/+2/+3 degC air temperature, and -10/-20/-30 % streamflow.
inline std::vector<Scenario> standard_scenarios(double water_temp_response = kDefaultWaterTempResponse) {
  auto make = [&](std::string name, double dt, double scale) {
    return Scenario{std::move(name), dt, scale, water_temp_response, 0.0};
  };
  return {make("baseline", 0.0, 1.0), make("C1", 1.0, 1.0), make("C2", 2.0, 1.0), make("C3", 3.0, 1.0),
          make("R10", 0.0, 0.9),      make("R20", 0.0, 0.8), make("R30", 0.0, 0.7)};
}

/// Reads a flat scenario file:
///
///   # comment
///   [C1]
///   air_temp_delta_c = 1.0
///   streamflow_scale = 1.0
///   water_temp_response = 0.6
///
/// Omitted keys take the Scenario defaults (water_temp_response falls back to
/// `default_response`).
inline std::vector<Scenario> parse_scenarios(std::istream& in, const std::string& path,
                                             double default_response = kDefaultWaterTempResponse) {
  std::vector<Scenario> out;
  std::string line;
  long line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::Parse, what, {.file = path, .row = line_no});
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = csv::trim(line);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') fail("unterminated section header");
      std::string name = csv::trim(std::string_view{text}.substr(1, text.size() - 2));
      if (name.size() >= 2 && name.front() == '"' && name.back() == '"') name = name.substr(1, name.size() - 2);
      if (name.empty()) fail("empty scenario name");
      for (const auto& s : out) {
        if (s.name == name) fail("duplicate scenario '" + name + "'");
      }
      out.push_back(Scenario{name, 0.0, 1.0, default_response, 0.0});
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    if (out.empty()) fail("key outside of a [scenario] section");
    const std::string key = csv::trim(std::string_view{text}.substr(0, eq));
    const std::string raw = csv::trim(std::string_view{text}.substr(eq + 1));
    const auto value = csv::to_number(raw);
    if (!value) fail("not a number: '" + raw + "'");
    Scenario& s = out.back();
    if (key == "air_temp_delta_c") {
      s.air_temp_delta_c = *value;
    } else if (key == "streamflow_scale") {
      s.streamflow_scale = *value;
    } else if (key == "water_temp_response") {
      s.water_temp_response = *value;
    } else if (key == "water_temp_flow_response") {
      s.water_temp_flow_response = *value;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  for (const auto& s : out) {
    try {
      validate(s);
    } catch (const Error& e) {
      throw e.annotated({.file = path});
    }
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "no scenarios defined", {.file = path});
  return out;
}

inline std::vector<Scenario> load_scenarios(const std::string& path,
                                            double default_response = kDefaultWaterTempResponse) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open file", {.file = path});
  return parse_scenarios(in, path, default_response);
}

}  // namespace droughtcap::scenario
