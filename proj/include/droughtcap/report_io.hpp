#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "droughtcap/aggregate.hpp"
#include "droughtcap/csv.hpp"

namespace droughtcap::report {

/// Long-form report: one row per (date, generator).
inline void write_csv(std::ostream& out, const CapacityReport& r) {
  out << "date,generator_id,category,available_mw,installed_mw\n";
  for (std::size_t d = 0; d < r.range.days(); ++d) {
    const std::string date = format_date(r.range.at(d));
    for (const auto& g : r.generators) {
      out << fmt::format("{},{},{},{:.6f},{:.6f}\n", date, csv::escape(g.id), to_string(g.category),
                         g.available.values[d], g.installed_mw);
    }
  }
}

inline nlohmann::ordered_json summary_entry(std::size_t count, double installed, const CfSummary& s) {
  return {{"generators", count}, {"installed_mw", installed}, {"median_cf", s.median}, {"min_cf", s.min},
          {"max_cf", s.max}};
}

inline nlohmann::ordered_json summary_json(const CapacityReport& r, const std::string& scenario = {}) {
  nlohmann::ordered_json j;
  if (!scenario.empty()) j["scenario"] = scenario;
  j["date_start"] = format_date(r.range.first);
  j["date_end"] = format_date(r.range.last);
  j["days"] = r.range.days();
  nlohmann::ordered_json cats = nlohmann::ordered_json::object();
  for (const auto& [tech, cat] : r.categories) {
    cats[std::string{to_string(tech)}] = summary_entry(cat.generator_count, cat.installed_mw, cat.summary);
  }
  j["categories"] = std::move(cats);
  j["fleet"] = summary_entry(r.generators.size(), r.fleet_installed_mw, r.fleet_summary);
  return j;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write file", {.file = path});
  out << content;
  if (!out) throw Error(ErrorKind::Io, "write failed", {.file = path});
}

/// Writes report.csv and summary.json into `dir` (which must exist).
inline void write_outputs(const std::string& dir, const CapacityReport& r, const std::string& scenario = {}) {
  std::ostringstream csv_text;
  write_csv(csv_text, r);
  write_file(dir + "/report.csv", csv_text.str());
  write_file(dir + "/summary.json", summary_json(r, scenario).dump(2) + "\n");
}

/// Scenario x category table of median capacity factors, "Fleet" last.
inline std::string scenario_table_csv(const std::vector<std::pair<std::string, CapacityReport>>& runs) {
  std::string out = "scenario,category,median_cf,min_cf,max_cf\n";
  for (const auto& [name, r] : runs) {
    for (const auto& [tech, cat] : r.categories) {
      out += fmt::format("{},{},{:.6f},{:.6f},{:.6f}\n", name, to_string(tech), cat.summary.median,
                         cat.summary.min, cat.summary.max);
    }
    out += fmt::format("{},Fleet,{:.6f},{:.6f},{:.6f}\n", name, r.fleet_summary.median, r.fleet_summary.min,
                       r.fleet_summary.max);
  }
  return out;
}

inline nlohmann::ordered_json scenario_summary_json(const std::vector<std::pair<std::string, CapacityReport>>& runs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [name, r] : runs) j.push_back(summary_json(r, name));
  return {{"scenarios", std::move(j)}};
}

}  // namespace droughtcap::report
