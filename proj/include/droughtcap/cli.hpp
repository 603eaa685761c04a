#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "droughtcap/aggregate.hpp"
#include "droughtcap/fleet_io.hpp"
#include "droughtcap/report_io.hpp"
#include "droughtcap/scenario.hpp"

namespace droughtcap::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kInputError = 2,
  kComputeError = 3,
};

struct RunConfig {
  std::string fleet_path;
  std::string hydrology_path;
  std::string weather_path;
  std::string curves_path;
  std::string pv_coeffs_path;
  std::string scenario_path;
  std::string date_start;
  std::string date_end;
  std::string output_dir;
  unsigned jobs{1};
  bool no_regulatory_limit{false};
  double water_temp_response{scenario::kDefaultWaterTempResponse};
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeFlow:
    case ErrorKind::NegativeIrradiance:
    case ErrorKind::NonpositiveIrradiance:
    case ErrorKind::NegativeSpeed:
    case ErrorKind::OutOfRange:
    case ErrorKind::NoConvergence:
    case ErrorKind::EmptyCategory:
    case ErrorKind::DegenerateInput:
      return kComputeError;
    default:
      return kInputError;
  }
}

/// Logger used by the CLI. Level comes from DROUGHTCAP_LOG
/// (trace|debug|info|warn|error|critical|off), default warn.
inline std::shared_ptr<spdlog::logger> logger() {
  static const auto instance = [] {
    auto lg = spdlog::get("droughtcap");
    if (!lg) lg = spdlog::stderr_color_mt("droughtcap");
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("DROUGHTCAP_LOG"); env && *env) level = spdlog::level::from_str(env);
    lg->set_level(level);
    return lg;
  }();
  return instance;
}

inline InputPaths input_paths(const RunConfig& cfg) {
  return {cfg.fleet_path, cfg.hydrology_path, cfg.weather_path, cfg.curves_path, cfg.pv_coeffs_path};
}

inline DateRange parse_range(const RunConfig& cfg) {
  const auto first = parse_date(cfg.date_start);
  if (!first) throw Error(ErrorKind::Parse, "bad --start date '" + cfg.date_start + "'", {.field = "start"});
  const auto last = parse_date(cfg.date_end);
  if (!last) throw Error(ErrorKind::Parse, "bad --end date '" + cfg.date_end + "'", {.field = "end"});
  DateRange range{*first, *last};
  if (!range.valid()) throw Error(ErrorKind::InvariantViolation, "--start is after --end", {.field = "start"});
  return range;
}

inline void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create directory: " + ec.message(), {.file = dir});
}

inline int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return exit_code_for(e.kind());
}

/// Loads inputs, derates the fleet over the configured range, and writes
/// report.csv and summary.json.
inline int cmd_derate(const RunConfig& cfg, std::ostream& err = std::cerr) {
  try {
    const DateRange range = parse_range(cfg);
    const FleetRegistry reg = load_registry(input_paths(cfg));
    logger()->info("loaded {} generators, {} hydrology sites, {} weather sites", reg.generators.size(),
                   reg.hydrology.size(), reg.weather.size());
    const CapacityReport r = derate_fleet(reg, range, {cfg.no_regulatory_limit, cfg.jobs});
    ensure_directory(cfg.output_dir);
    report::write_outputs(cfg.output_dir, r);
    logger()->info("wrote {} generator-days to {}", r.generators.size() * range.days(), cfg.output_dir);
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

/// Runs every scenario (the standard set unless a scenario file is given),
/// writing <out>/<scenario>/{report.csv,summary.json} plus cross-scenario
/// scenario_summary.csv and scenario_summary.json.
inline int cmd_scenario(const RunConfig& cfg, std::ostream& err = std::cerr) {
  try {
    const DateRange range = parse_range(cfg);
    const auto scenarios = cfg.scenario_path.empty()
                               ? scenario::standard_scenarios(cfg.water_temp_response)
                               : scenario::load_scenarios(cfg.scenario_path, cfg.water_temp_response);
    const FleetRegistry base = load_registry(input_paths(cfg));
    ensure_directory(cfg.output_dir);

    std::vector<std::pair<std::string, CapacityReport>> runs;
    for (const auto& s : scenarios) {
      logger()->info("scenario {}: dT={} scale={}", s.name, s.air_temp_delta_c, s.streamflow_scale);
      CapacityReport r = derate_fleet(scenario::apply(base, s), range, {cfg.no_regulatory_limit, cfg.jobs});
      const std::string dir = cfg.output_dir + "/" + s.name;
      ensure_directory(dir);
      report::write_outputs(dir, r);
      runs.emplace_back(s.name, std::move(r));
    }
    report::write_file(cfg.output_dir + "/scenario_summary.csv", report::scenario_table_csv(runs));
    report::write_file(cfg.output_dir + "/scenario_summary.json", report::scenario_summary_json(runs).dump(2) + "\n");
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

/// Schema and invariant checks only. Prints every violation; exit 1 if any.
inline int cmd_validate(const RunConfig& cfg, std::ostream& out = std::cout) {
  Diagnostics diag;
  inspect_inputs(input_paths(cfg), diag);
  if (!cfg.date_start.empty() || !cfg.date_end.empty()) {
    try {
      parse_range(cfg);
    } catch (const Error& e) {
      diag.add(e);
    }
  }
  if (!cfg.scenario_path.empty()) {
    try {
      scenario::load_scenarios(cfg.scenario_path, cfg.water_temp_response);
    } catch (const Error& e) {
      diag.add(e);
    }
  }
  for (const auto& e : diag.issues) out << e.what() << '\n';
  out << fmt::format("{} violation(s)\n", diag.issues.size());
  return diag.ok() ? kOk : kValidationFailed;
}

/// Entry point shared by the droughtcap executable and tests.
inline int run(int argc, const char* const* argv) {
  CLI::App app{"Drought capacity-derating engine for hydro, thermal, and renewable generators"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_inputs = [&cfg](CLI::App* sub, bool needs_range) {
    sub->add_option("--fleet", cfg.fleet_path, "fleet.csv")->required();
    sub->add_option("--hydrology", cfg.hydrology_path, "hydrology.csv")->required();
    sub->add_option("--weather", cfg.weather_path, "weather.csv")->required();
    sub->add_option("--curves", cfg.curves_path, "wind power curves (curves.csv)");
    sub->add_option("--pv-coeffs", cfg.pv_coeffs_path, "PV efficiency coefficient overrides (pv_coeffs.csv)");
    sub->add_option("--scenarios", cfg.scenario_path, "scenario definitions file");
    sub->add_option("--water-temp-response", cfg.water_temp_response,
                    "degC of water warming per degC of air warming in scenarios");
    auto* start = sub->add_option("--start", cfg.date_start, "first day, YYYY-MM-DD");
    auto* end = sub->add_option("--end", cfg.date_end, "last day, YYYY-MM-DD");
    if (needs_range) {
      start->required();
      end->required();
      sub->add_option("--out", cfg.output_dir, "output directory")->required();
      sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
      sub->add_flag("--no-regulatory-limit", cfg.no_regulatory_limit,
                    "ignore the discharge-temperature limit for once-through units");
    }
  };

  auto* derate = app.add_subcommand("derate", "daily usable capacity for one date range");
  add_inputs(derate, true);
  auto* scen = app.add_subcommand("scenario", "run a sensitivity scenario sweep");
  add_inputs(scen, true);
  auto* validate = app.add_subcommand("validate", "check input files without computing");
  add_inputs(validate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (derate->parsed()) return cmd_derate(cfg);
  if (scen->parsed()) return cmd_scenario(cfg);
  return cmd_validate(cfg);
}

}  // namespace droughtcap::cli
