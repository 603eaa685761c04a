#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "droughtcap/fleet.hpp"
#include "droughtcap/psychrometrics.hpp"

namespace droughtcap {

struct DeratingOptions {
  bool no_regulatory_limit{false};
  unsigned jobs{1};
};

struct GeneratorSeries {
  std::string id;
  Technology category{Technology::Other};
  double installed_mw{};
  bool at_risk{};
  DailySeries available;
};

struct CfSummary {
  double median{};
  double min{};
  double max{};
};

struct CategoryTotals {
  std::size_t generator_count{};
  double installed_mw{};
  DailySeries total_mw;
  DailySeries capacity_factor;
  CfSummary summary;
};

/// Daily usable capacity per generator plus category and fleet roll-ups.
/// `generators` is in canonical order: category, then id.
struct CapacityReport {
  DateRange range{};
  std::vector<GeneratorSeries> generators;
  std::map<Technology, CategoryTotals> categories;
  double fleet_installed_mw{};
  DailySeries fleet_total;
  DailySeries fleet_cf;
  CfSummary fleet_summary;
};

/// Sum of available over sum of installed.
inline double capacity_factor(std::span<const double> available, std::span<const double> installed) {
  if (available.size() != installed.size()) {
    throw Error(ErrorKind::DegenerateInput, "available and installed lists differ in length");
  }
  double avail = 0.0;
  double inst = 0.0;
  for (std::size_t i = 0; i < available.size(); ++i) {
    if (!(available[i] >= 0.0 && available[i] <= installed[i])) {
      throw Error(ErrorKind::InvariantViolation,
                  fmt::format("available {} outside [0, installed {}]", available[i], installed[i]));
    }
    avail += available[i];
    inst += installed[i];
  }
  if (!(inst > 0.0)) throw Error(ErrorKind::EmptyCategory, "category has no installed capacity");
  return avail / inst;
}

inline CfSummary summarize(std::vector<double> values) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return {median, values.front(), values.back()};
}

struct LinearFit {
  double r_squared{};
  double slope{};
  double intercept{};
};

/// OLS fit of generation ratio on flow ratio, each series divided by its own
/// mean first.
inline LinearFit flow_generation_correlation(std::span<const double> annual_flows,
                                             std::span<const double> annual_generation) {
  const std::size_t n = annual_flows.size();
  if (n != annual_generation.size()) throw Error(ErrorKind::DegenerateInput, "series lengths differ");
  if (n < 3) throw Error(ErrorKind::DegenerateInput, "need at least 3 points");
  auto mean = [n](std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(n);
  };
  const double flow_mean = mean(annual_flows);
  const double gen_mean = mean(annual_generation);
  if (flow_mean == 0.0 || gen_mean == 0.0) throw Error(ErrorKind::DegenerateInput, "zero mean cannot normalize");

  std::vector<double> x(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = annual_flows[i] / flow_mean;
    y[i] = annual_generation[i] / gen_mean;
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw Error(ErrorKind::DegenerateInput, "flows have zero variance");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (fit.intercept + fit.slope * x[i]);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

/// Runs `body(i)` for i in [0, n) on up to `jobs` threads. If any call
/// throws, the exception from the lowest index is rethrown.
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) run(i);
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace detail {

inline std::vector<double> channel(const std::optional<DailySeries>& series, bool site_known,
                                   const GeneratorRecord& g, std::string_view name, const DateRange& range) {
  const ErrorContext ctx{.generator = g.id, .site = g.site_id, .channel = std::string{name}};
  if (!site_known) throw Error(ErrorKind::MissingSeries, "site has no records for this channel", ctx);
  if (!series) throw Error(ErrorKind::MissingSeries, "channel is absent for this site", ctx);
  if (!series->covers(range)) {
    throw Error(ErrorKind::MissingSeries,
                fmt::format("series spans {}..{}, need {}..{}", format_date(series->start), format_date(series->last()),
                            format_date(range.first), format_date(range.last)),
                ctx);
  }
  return series->slice(range);
}

}  // namespace detail

/// Daily usable capacity (MW) of one generator over `range`. Units that are
/// not at risk report nameplate every day.
inline DailySeries derate_generator(const GeneratorRecord& g, const FleetRegistry& reg, const DateRange& range,
                                    const DeratingOptions& opts = {}) {
  const std::size_t days = range.days();
  DailySeries out{range.first, std::vector<double>(days, g.installed_capacity_mw), Unit::MW};
  if (!classify_at_risk(g)) return out;

  const auto hyd_it = reg.hydrology.find(g.site_id);
  const auto wx_it = reg.weather.find(g.site_id);
  const bool has_hyd = hyd_it != reg.hydrology.end();
  const bool has_wx = wx_it != reg.weather.end();
  static const SiteHydrology no_hyd;
  static const SiteWeather no_wx;
  const SiteHydrology& hyd = has_hyd ? hyd_it->second : no_hyd;
  const SiteWeather& wx = has_wx ? wx_it->second : no_wx;
  auto hyd_channel = [&](const std::optional<DailySeries>& s, std::string_view name) {
    return detail::channel(s, has_hyd, g, name, range);
  };
  auto wx_channel = [&](const std::optional<DailySeries>& s, std::string_view name) {
    return detail::channel(s, has_wx, g, name, range);
  };

  auto each_day = [&](auto&& compute) {
    for (std::size_t d = 0; d < days; ++d) {
      try {
        out.values[d] = compute(d);
      } catch (const Error& e) {
        throw e.annotated({.generator = g.id, .site = g.site_id, .date = format_date(range.at(d))});
      }
    }
  };

  switch (g.technology) {
    case Technology::Hydro: {
      const auto flow = hyd_channel(hyd.streamflow, "streamflow");
      const auto p = hydro_params(g);
      each_day([&](std::size_t d) { return hydro::usable_capacity(p, flow[d]); });
      break;
    }
    case Technology::SteamOnceThrough: {
      const auto flow = hyd_channel(hyd.streamflow, "streamflow");
      const auto tw = hyd_channel(hyd.water_temperature, "water_temperature");
      const auto p = once_through_params(g);
      const once_through::Options ot_opts{opts.no_regulatory_limit};
      each_day([&](std::size_t d) { return once_through::usable_capacity(p, flow[d], tw[d], ot_opts); });
      break;
    }
    case Technology::SteamRecirculating: {
      const auto flow = hyd_channel(hyd.streamflow, "streamflow");
      const auto tw = hyd_channel(hyd.water_temperature, "water_temperature");
      const auto td = wx_channel(wx.dry_bulb, "dry_bulb");
      const auto rh = wx_channel(wx.relative_humidity, "relative_humidity");
      const auto pr = wx_channel(wx.pressure, "pressure");
      const auto p = recirc_params(g);
      each_day([&](std::size_t d) {
        return recirc::usable_capacity(p, flow[d], tw[d], psychro::air_state(td[d], rh[d], pr[d]));
      });
      break;
    }
    case Technology::CombustionTurbine: {
      const auto td = wx_channel(wx.dry_bulb, "dry_bulb");
      const auto p = ct_params(g);
      each_day([&](std::size_t d) { return ct::usable_capacity(p, td[d]); });
      break;
    }
    case Technology::SolarPV: {
      const auto irr = wx_channel(wx.irradiance, "irradiance");
      const auto td = wx_channel(wx.dry_bulb, "dry_bulb");
      const auto p = pv_params(g, reg);
      each_day([&](std::size_t d) { return pv::power(p, irr[d], td[d]); });
      break;
    }
    case Technology::Wind: {
      const auto v2 = wx_channel(wx.wind_2m, "wind_2m");
      const auto v10 = wx_channel(wx.wind_10m, "wind_10m");
      const auto v50 = wx_channel(wx.wind_50m, "wind_50m");
      const auto p = wind_params(g);
      each_day([&](std::size_t d) { return wind::usable_capacity(p, reg.wind_curves, v2[d], v10[d], v50[d]); });
      break;
    }
    case Technology::Other:
      break;
  }
  return out;
}

/// Derates every generator and rolls results up by category and fleet.
/// Per-generator work runs on `opts.jobs` threads; all sums are taken
/// sequentially in canonical order, so the report does not depend on `jobs`.
inline CapacityReport derate_fleet(const FleetRegistry& reg, const DateRange& range, const DeratingOptions& opts = {}) {
  if (!range.valid()) throw Error(ErrorKind::InvariantViolation, "date range start is after its end");
  const std::size_t days = range.days();

  std::vector<const GeneratorRecord*> order;
  order.reserve(reg.generators.size());
  for (const auto& [id, g] : reg.generators) order.push_back(&g);
  std::stable_sort(order.begin(), order.end(), [](const GeneratorRecord* a, const GeneratorRecord* b) {
    return a->technology < b->technology;
  });

  CapacityReport report;
  report.range = range;
  report.generators.resize(order.size());
  parallel_for(order.size(), opts.jobs, [&](std::size_t i) {
    const GeneratorRecord& g = *order[i];
    report.generators[i] = {g.id, g.technology, g.installed_capacity_mw, classify_at_risk(g),
                            derate_generator(g, reg, range, opts)};
  });

  report.fleet_total = {range.first, std::vector<double>(days, 0.0), Unit::MW};
  for (const auto& gs : report.generators) {
    auto& cat = report.categories[gs.category];
    if (cat.total_mw.empty()) cat.total_mw = {range.first, std::vector<double>(days, 0.0), Unit::MW};
    cat.generator_count += 1;
    cat.installed_mw += gs.installed_mw;
    report.fleet_installed_mw += gs.installed_mw;
    for (std::size_t d = 0; d < days; ++d) {
      cat.total_mw.values[d] += gs.available.values[d];
      report.fleet_total.values[d] += gs.available.values[d];
    }
  }

  auto cf_series = [&](const DailySeries& total, double installed) {
    DailySeries cf{range.first, std::vector<double>(days, 0.0), Unit::fraction};
    for (std::size_t d = 0; d < days; ++d) {
      if (!(installed > 0.0)) throw Error(ErrorKind::EmptyCategory, "category has no installed capacity");
      cf.values[d] = std::clamp(total.values[d] / installed, 0.0, 1.0);
    }
    return cf;
  };
  for (auto& [tech, cat] : report.categories) {
    cat.capacity_factor = cf_series(cat.total_mw, cat.installed_mw);
    cat.summary = summarize(cat.capacity_factor.values);
  }
  if (!report.generators.empty()) {
    report.fleet_cf = cf_series(report.fleet_total, report.fleet_installed_mw);
    report.fleet_summary = summarize(report.fleet_cf.values);
  }
  return report;
}

}  // namespace droughtcap
