#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "droughtcap/csv.hpp"
#include "droughtcap/fleet.hpp"

namespace droughtcap {

inline const std::vector<std::string_view> kFleetColumns{
    "id",        "name",      "technology", "installed_capacity_mw", "site_id", "water_source", "fuel",
    "head_m",    "hydro_efficiency", "net_efficiency", "k_os", "tl_max_c", "dtl_max_c", "n_cc",
    "sigma",     "t_app_c",   "k_sens",     "gamma",  "c_t",     "hub_height_m", "curve_id"};
inline const std::vector<std::string_view> kHydrologyColumns{"site_id", "date", "streamflow_m3s", "water_temp_c"};
inline const std::vector<std::string_view> kWeatherColumns{"site_id",        "date",     "dry_bulb_c",
                                                           "rh_pct",         "pressure_kpa", "irradiance_wm2",
                                                           "wind2_ms",       "wind10_ms", "wind50_ms"};
inline const std::vector<std::string_view> kCurveColumns{"curve_id", "speed_ms", "power_fraction"};

/// Problems found while reading one or more input files. Loading continues
/// past row-level problems so every violation can be reported at once.
struct Diagnostics {
  std::vector<Error> issues;

  [[nodiscard]] bool ok() const { return issues.empty(); }
  void add(Error e) { issues.push_back(std::move(e)); }
  void merge(const Diagnostics& other) { issues.insert(issues.end(), other.issues.begin(), other.issues.end()); }

  /// Throws the first issue, noting how many others were found.
  void throw_if_any() const {
    if (issues.empty()) return;
    const Error& first = issues.front();
    if (issues.size() == 1) throw first;
    throw Error(first.kind(), first.detail() + fmt::format(" (and {} more issue(s))", issues.size() - 1),
                first.context());
  }
};

namespace detail {

/// Row-scoped field access that records violations instead of throwing.
class RowReader {
 public:
  RowReader(const csv::Table& table, const csv::Row& row, Diagnostics& diag)
      : table_(table), row_(row), diag_(diag) {}

  [[nodiscard]] const std::string& text(std::size_t col) const {
    static const std::string empty;
    return col < row_.fields.size() ? row_.fields[col] : empty;
  }

  [[nodiscard]] ErrorContext where(std::size_t col) const {
    return {.file = table_.path, .row = row_.line, .field = std::string{table_.header.at(col)}};
  }

  void fail(ErrorKind kind, std::size_t col, std::string what) {
    diag_.add(Error(kind, std::move(what), where(col)));
    failed_ = true;
  }

  /// Blank -> nullopt; malformed -> records Parse and returns nullopt.
  std::optional<double> number(std::size_t col) {
    const auto& t = text(col);
    if (t.empty()) return std::nullopt;
    auto v = csv::to_number(t);
    if (!v) fail(ErrorKind::Parse, col, "not a finite number: '" + t + "'");
    return v;
  }

  std::optional<double> required(std::size_t col, std::string_view why) {
    if (text(col).empty()) {
      fail(ErrorKind::InvariantViolation, col, std::string{"required "} + std::string{why});
      return std::nullopt;
    }
    return number(col);
  }

  /// Checks `ok(value)` and records an InvariantViolation otherwise.
  void check(std::size_t col, double value, bool ok, std::string_view rule) {
    if (!ok) fail(ErrorKind::InvariantViolation, col, fmt::format("{} violates {}", value, rule));
  }

  [[nodiscard]] bool failed() const { return failed_; }
  [[nodiscard]] long line() const { return row_.line; }

 private:
  const csv::Table& table_;
  const csv::Row& row_;
  Diagnostics& diag_;
  bool failed_{false};
};

enum FleetCol : std::size_t {
  kId, kName, kTechnology, kCapacity, kSite, kWaterSource, kFuel, kHead, kHydroEff, kNetEff, kKos,
  kTlMax, kDtlMax, kNcc, kSigma, kTapp, kKsens, kGamma, kCt, kHub, kCurve
};

inline bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

inline std::optional<GeneratorRecord> parse_generator(const csv::Table& table, const csv::Row& row,
                                                      Diagnostics& diag) {
  RowReader r(table, row, diag);
  if (row.fields.size() != table.header.size()) {
    diag.add(Error(ErrorKind::Parse,
                   fmt::format("expected {} fields, found {}", table.header.size(), row.fields.size()),
                   {.file = table.path, .row = row.line}));
    return std::nullopt;
  }

  GeneratorRecord g;
  g.id = r.text(kId);
  g.name = r.text(kName);
  g.site_id = r.text(kSite);
  if (g.id.empty()) r.fail(ErrorKind::InvariantViolation, kId, "id must be nonempty");
  if (g.site_id.empty()) r.fail(ErrorKind::InvariantViolation, kSite, "site_id must be nonempty");

  if (auto t = parse_technology(r.text(kTechnology))) {
    g.technology = *t;
  } else {
    r.fail(ErrorKind::BadEnum, kTechnology, "unknown technology '" + r.text(kTechnology) + "'");
  }
  if (auto w = parse_water_source(r.text(kWaterSource))) {
    g.water_source = *w;
  } else {
    r.fail(ErrorKind::BadEnum, kWaterSource, "unknown water_source '" + r.text(kWaterSource) + "'");
  }
  if (auto f = parse_fuel(r.text(kFuel))) {
    g.fuel = *f;
  } else {
    r.fail(ErrorKind::BadEnum, kFuel, "unknown fuel '" + r.text(kFuel) + "'");
  }

  if (auto cap = r.required(kCapacity, "installed capacity")) {
    g.installed_capacity_mw = *cap;
    r.check(kCapacity, *cap, *cap > 0.0, "installed_capacity > 0");
  }

  switch (g.technology) {
    case Technology::Hydro: {
      HydroSpec h;
      if (auto head = r.required(kHead, "for Hydro")) {
        h.head_m = *head;
        r.check(kHead, *head, *head > 0.0, "head > 0");
      }
      if (auto eff = r.number(kHydroEff)) {
        h.efficiency = *eff;
        r.check(kHydroEff, *eff, *eff > 0.0 && *eff <= 1.0, "0 < efficiency <= 1");
      }
      g.hydro = h;
      break;
    }
    case Technology::SteamOnceThrough:
    case Technology::SteamRecirculating: {
      const bool once = g.technology == Technology::SteamOnceThrough;
      ThermalSpec t;
      t.heat_sink_fraction = defaults::heat_sink_fraction(g.fuel);
      if (auto v = r.required(kNetEff, "for thermal units")) {
        t.net_efficiency = *v;
        r.check(kNetEff, *v, *v > 0.0 && *v <= 1.0, "0 < net_efficiency <= 1");
      }
      if (auto v = r.number(kKos)) {
        t.heat_sink_fraction = *v;
        r.check(kKos, *v, in_unit(*v), "k_os in [0, 1]");
      }
      if (t.net_efficiency > 0.0) {
        r.check(kNetEff, t.net_efficiency + t.heat_sink_fraction, t.net_efficiency + t.heat_sink_fraction < 1.0,
                "net_efficiency + k_os < 1");
      }
      if (auto v = r.number(kTlMax)) t.max_discharge_temp_c = *v;
      if (auto v = once ? r.required(kDtlMax, "for once-through units") : r.number(kDtlMax)) {
        t.max_condenser_rise_c = *v;
        r.check(kDtlMax, *v, *v > 0.0, "dtl_max > 0");
      }
      if (auto v = r.number(kNcc)) {
        t.cycles_of_concentration = *v;
        r.check(kNcc, *v, *v > 1.0, "n_cc > 1");
      }
      if (auto v = r.number(kSigma)) {
        t.water_air_ratio = *v;
        r.check(kSigma, *v, *v >= 0.5 && *v <= 1.5, "sigma in [0.5, 1.5]");
      }
      if (auto v = r.number(kTapp)) {
        t.tower_approach_c = *v;
        r.check(kTapp, *v, *v >= 0.0, "t_app >= 0");
      }
      if (auto v = r.number(kKsens)) {
        t.sensible_fraction = *v;
        r.check(kKsens, *v, in_unit(*v), "k_sens in [0, 1]");
      }
      if (auto v = r.number(kGamma)) {
        t.stream_fraction = *v;
        r.check(kGamma, *v, *v > 0.0 && *v <= 1.0, "0 < gamma <= 1");
      }
      g.thermal = t;
      break;
    }
    case Technology::SolarPV: {
      PvSpec p;
      if (auto v = r.number(kCt)) {
        p.thermal_coefficient = *v;
        r.check(kCt, *v, *v >= 0.025 && *v <= 0.05, "c_t in [0.025, 0.05]");
      }
      g.pv = p;
      break;
    }
    case Technology::Wind: {
      WindSpec w;
      if (auto v = r.required(kHub, "for Wind")) {
        w.hub_height_m = *v;
        r.check(kHub, *v, *v >= 10.0 && *v <= 200.0, "hub_height in [10, 200]");
      }
      w.curve_id = r.text(kCurve);
      if (w.curve_id.empty()) r.fail(ErrorKind::InvariantViolation, kCurve, "required for Wind");
      g.wind = w;
      break;
    }
    case Technology::CombustionTurbine:
    case Technology::Other:
      break;
  }

  if (r.failed()) return std::nullopt;
  return g;
}

struct ChannelSpec {
  std::size_t column;
  Unit unit;
  std::function<bool(double)> valid;
  std::string_view rule;
};

struct Sample {
  Date date;
  long line;
  std::vector<std::optional<double>> values;
};

/// Groups rows by site, checks date order/gaps, and builds one series per
/// channel. A channel blank on every row of a site is absent for that site.
inline std::map<std::string, std::vector<std::optional<DailySeries>>> parse_site_series(
    const csv::Table& table, const std::vector<ChannelSpec>& channels, Diagnostics& diag) {
  std::map<std::string, std::vector<Sample>> by_site;
  for (const auto& row : table.rows) {
    RowReader r(table, row, diag);
    if (row.fields.size() != table.header.size()) {
      diag.add(Error(ErrorKind::Parse,
                     fmt::format("expected {} fields, found {}", table.header.size(), row.fields.size()),
                     {.file = table.path, .row = row.line}));
      continue;
    }
    const std::string& site = r.text(0);
    if (site.empty()) r.fail(ErrorKind::InvariantViolation, 0, "site_id must be nonempty");
    const auto date = parse_date(r.text(1));
    if (!date) r.fail(ErrorKind::Parse, 1, "not an ISO-8601 date: '" + r.text(1) + "'");
    Sample s{date.value_or(Date{}), row.line, {}};
    for (const auto& ch : channels) {
      auto v = r.number(ch.column);
      if (v) r.check(ch.column, *v, ch.valid(*v), ch.rule);
      s.values.push_back(v);
    }
    if (!r.failed()) by_site[site].push_back(std::move(s));
  }

  std::map<std::string, std::vector<std::optional<DailySeries>>> out;
  for (auto& [site, samples] : by_site) {
    std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.date < b.date; });
    bool contiguous = true;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      const auto step = (samples[i].date - samples[i - 1].date).count();
      if (step != 1) {
        diag.add(Error(ErrorKind::InvariantViolation,
                       step == 0 ? "duplicate date" : fmt::format("gap of {} days before this date", step - 1),
                       {.file = table.path, .row = samples[i].line, .site = site,
                        .date = format_date(samples[i].date)}));
        contiguous = false;
      }
    }
    if (!contiguous) continue;
    std::vector<std::optional<DailySeries>> series;
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const auto blanks = std::count_if(samples.begin(), samples.end(),
                                        [c](const Sample& s) { return !s.values[c].has_value(); });
      if (blanks == static_cast<std::ptrdiff_t>(samples.size())) {
        series.emplace_back(std::nullopt);
        continue;
      }
      if (blanks > 0) {
        const auto gap = std::find_if(samples.begin(), samples.end(),
                                      [c](const Sample& s) { return !s.values[c].has_value(); });
        diag.add(Error(ErrorKind::InvariantViolation, "blank value inside a populated channel",
                       {.file = table.path, .row = gap->line,
                        .field = std::string{table.header[channels[c].column]}, .site = site,
                        .date = format_date(gap->date)}));
        series.emplace_back(std::nullopt);
        continue;
      }
      DailySeries s{samples.front().date, {}, channels[c].unit};
      s.values.reserve(samples.size());
      for (const auto& smp : samples) s.values.push_back(*smp.values[c]);
      series.emplace_back(std::move(s));
    }
    out.emplace(site, std::move(series));
  }
  return out;
}

inline bool non_negative(double v) { return v >= 0.0; }
inline bool any_value(double) { return true; }

}  // namespace detail

/// Parses fleet.csv, collecting every row-level violation. Rows with
/// violations are left out of the returned map.
inline std::map<std::string, GeneratorRecord> parse_fleet(const csv::Table& table, Diagnostics& diag) {
  std::map<std::string, GeneratorRecord> generators;
  try {
    csv::require_columns(table, kFleetColumns);
  } catch (const Error& e) {
    diag.add(e);
    return generators;
  }
  std::map<std::string, long> first_seen;
  for (const auto& row : table.rows) {
    auto g = detail::parse_generator(table, row, diag);
    if (!g) continue;
    if (auto [it, inserted] = first_seen.emplace(g->id, row.line); !inserted) {
      diag.add(Error(ErrorKind::InvariantViolation,
                     fmt::format("duplicate generator id '{}' (first on row {})", g->id, it->second),
                     {.file = table.path, .row = row.line, .field = "id", .generator = g->id}));
      continue;
    }
    generators.emplace(g->id, std::move(*g));
  }
  return generators;
}

inline std::map<std::string, SiteHydrology> parse_hydrology(const csv::Table& table, Diagnostics& diag) {
  std::map<std::string, SiteHydrology> out;
  try {
    csv::require_columns(table, kHydrologyColumns);
  } catch (const Error& e) {
    diag.add(e);
    return out;
  }
  const std::vector<detail::ChannelSpec> channels{
      {2, Unit::m3_per_s, detail::non_negative, "streamflow >= 0"},
      {3, Unit::degC, detail::any_value, "finite"},
  };
  for (auto& [site, series] : detail::parse_site_series(table, channels, diag)) {
    out.emplace(site, SiteHydrology{site, std::move(series[0]), std::move(series[1])});
  }
  return out;
}

inline std::map<std::string, SiteWeather> parse_weather(const csv::Table& table, Diagnostics& diag) {
  std::map<std::string, SiteWeather> out;
  try {
    csv::require_columns(table, kWeatherColumns);
  } catch (const Error& e) {
    diag.add(e);
    return out;
  }
  const std::vector<detail::ChannelSpec> channels{
      {2, Unit::degC, detail::any_value, "finite"},
      {3, Unit::percent, [](double v) { return v >= 0.0 && v <= 100.0; }, "rh in [0, 100]"},
      {4, Unit::kPa, [](double v) { return v > 0.0; }, "pressure > 0"},
      {5, Unit::W_per_m2, detail::non_negative, "irradiance >= 0"},
      {6, Unit::m_per_s, detail::non_negative, "wind speed >= 0"},
      {7, Unit::m_per_s, detail::non_negative, "wind speed >= 0"},
      {8, Unit::m_per_s, detail::non_negative, "wind speed >= 0"},
  };
  for (auto& [site, s] : detail::parse_site_series(table, channels, diag)) {
    out.emplace(site, SiteWeather{site, std::move(s[0]), std::move(s[1]), std::move(s[2]), std::move(s[3]),
                                  std::move(s[4]), std::move(s[5]), std::move(s[6])});
  }
  return out;
}

/// curves.csv: knots listed in increasing speed per curve_id.
inline std::map<std::string, wind::WindPowerCurve> parse_curves(const csv::Table& table, Diagnostics& diag) {
  std::map<std::string, wind::WindPowerCurve> out;
  try {
    csv::require_columns(table, kCurveColumns);
  } catch (const Error& e) {
    diag.add(e);
    return out;
  }
  std::map<std::string, std::vector<wind::CurvePoint>> knots;
  std::map<std::string, long> first_line;
  for (const auto& row : table.rows) {
    detail::RowReader r(table, row, diag);
    const auto speed = r.required(1, "speed");
    const auto fraction = r.required(2, "power fraction");
    if (r.text(0).empty()) r.fail(ErrorKind::InvariantViolation, 0, "curve_id must be nonempty");
    if (r.failed()) continue;
    first_line.emplace(r.text(0), row.line);
    knots[r.text(0)].push_back({*speed, *fraction});
  }
  for (auto& [id, pts] : knots) {
    try {
      out.emplace(id, wind::make_curve(id, std::move(pts)));
    } catch (const Error& e) {
      diag.add(e.annotated({.file = table.path, .row = first_line[id]}));
    }
  }
  return out;
}

/// pv_coeffs.csv: k1..k6, optionally preceded by a generator_id column. A
/// row with a blank generator_id (or no such column) sets the fleet default.
inline void parse_pv_coefficients(const csv::Table& table, FleetRegistry& reg, Diagnostics& diag) {
  const std::vector<std::string_view> bare{"k1", "k2", "k3", "k4", "k5", "k6"};
  std::vector<std::string_view> keyed{"generator_id"};
  keyed.insert(keyed.end(), bare.begin(), bare.end());
  const bool has_id = !table.header.empty() && table.header.front() == "generator_id";
  try {
    csv::require_columns(table, has_id ? keyed : bare);
  } catch (const Error& e) {
    diag.add(e);
    return;
  }
  const std::size_t offset = has_id ? 1 : 0;
  for (const auto& row : table.rows) {
    detail::RowReader r(table, row, diag);
    pv::EfficiencyCoefficients k{};
    for (std::size_t i = 0; i < 6; ++i) k[i] = r.required(offset + i, "coefficient").value_or(0.0);
    if (r.failed()) continue;
    const std::string id = has_id ? r.text(0) : std::string{};
    if (id.empty()) {
      reg.pv_coefficients = k;
    } else {
      reg.pv_overrides[id] = k;
    }
  }
}

/// Generators only, from fleet.csv. Throws the first violation found.
inline FleetRegistry load_fleet(const std::string& fleet_path) {
  Diagnostics diag;
  FleetRegistry reg;
  reg.generators = parse_fleet(csv::read_file(fleet_path), diag);
  diag.throw_if_any();
  return reg;
}

struct InputPaths {
  std::string fleet;
  std::string hydrology;
  std::string weather;
  std::string curves;     // optional
  std::string pv_coeffs;  // optional
};

/// Loads every input file and cross-checks references, collecting all
/// problems. The registry holds whatever parsed cleanly.
inline FleetRegistry inspect_inputs(const InputPaths& paths, Diagnostics& diag) {
  FleetRegistry reg;
  auto read = [&diag](const std::string& path) -> std::optional<csv::Table> {
    try {
      return csv::read_file(path);
    } catch (const Error& e) {
      diag.add(e);
      return std::nullopt;
    }
  };
  std::optional<csv::Table> fleet_table = read(paths.fleet);
  if (fleet_table) reg.generators = parse_fleet(*fleet_table, diag);
  if (auto t = read(paths.hydrology)) reg.hydrology = parse_hydrology(*t, diag);
  if (auto t = read(paths.weather)) reg.weather = parse_weather(*t, diag);
  if (!paths.curves.empty()) {
    if (auto t = read(paths.curves)) reg.wind_curves = parse_curves(*t, diag);
  }
  if (!paths.pv_coeffs.empty()) {
    if (auto t = read(paths.pv_coeffs)) parse_pv_coefficients(*t, reg, diag);
  }

  if (fleet_table) {
    std::map<std::string, long> lines;
    for (const auto& row : fleet_table->rows) {
      if (!row.fields.empty()) lines.emplace(row.fields.front(), row.line);
    }
    for (const auto& [id, g] : reg.generators) {
      const ErrorContext where{.file = paths.fleet, .row = lines[id], .generator = id, .site = g.site_id};
      if (!reg.hydrology.contains(g.site_id) && !reg.weather.contains(g.site_id)) {
        diag.add(Error(ErrorKind::UnresolvedSite, "site has no hydrology or weather records", where));
      }
      if (g.wind && !reg.wind_curves.contains(g.wind->curve_id)) {
        auto ctx = where;
        ctx.field = "curve_id";
        diag.add(Error(ErrorKind::UnknownCurve, "no power curve '" + g.wind->curve_id + "'", ctx));
      }
    }
  }
  return reg;
}

/// Full registry; throws the first problem found.
inline FleetRegistry load_registry(const InputPaths& paths) {
  Diagnostics diag;
  FleetRegistry reg = inspect_inputs(paths, diag);
  diag.throw_if_any();
  return reg;
}

/// Writes generators back out in the fleet.csv schema with every default made
/// explicit; loading the result reproduces the same records.
inline void write_fleet(std::ostream& out, const std::map<std::string, GeneratorRecord>& generators) {
  for (std::size_t i = 0; i < kFleetColumns.size(); ++i) out << (i ? "," : "") << kFleetColumns[i];
  out << '\n';
  auto num = [](double v) { return fmt::format("{}", v); };
  for (const auto& [id, g] : generators) {
    std::vector<std::string> f(kFleetColumns.size());
    f[detail::kId] = csv::escape(g.id);
    f[detail::kName] = csv::escape(g.name);
    f[detail::kTechnology] = to_string(g.technology);
    f[detail::kCapacity] = num(g.installed_capacity_mw);
    f[detail::kSite] = csv::escape(g.site_id);
    f[detail::kWaterSource] = to_string(g.water_source);
    f[detail::kFuel] = to_string(g.fuel);
    if (g.hydro) {
      f[detail::kHead] = num(g.hydro->head_m);
      f[detail::kHydroEff] = num(g.hydro->efficiency);
    }
    if (g.thermal) {
      const auto& t = *g.thermal;
      f[detail::kNetEff] = num(t.net_efficiency);
      f[detail::kKos] = num(t.heat_sink_fraction);
      f[detail::kTlMax] = num(t.max_discharge_temp_c);
      if (t.max_condenser_rise_c) f[detail::kDtlMax] = num(*t.max_condenser_rise_c);
      f[detail::kNcc] = num(t.cycles_of_concentration);
      f[detail::kSigma] = num(t.water_air_ratio);
      f[detail::kTapp] = num(t.tower_approach_c);
      f[detail::kKsens] = num(t.sensible_fraction);
      f[detail::kGamma] = num(t.stream_fraction);
    }
    if (g.pv) f[detail::kCt] = num(g.pv->thermal_coefficient);
    if (g.wind) {
      f[detail::kHub] = num(g.wind->hub_height_m);
      f[detail::kCurve] = csv::escape(g.wind->curve_id);
    }
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << '\n';
  }
}

}  // namespace droughtcap
