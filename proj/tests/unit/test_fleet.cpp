#include <sstream>

#include <gtest/gtest.h>

#include "droughtcap/fleet_io.hpp"
#include "support.hpp"

using namespace droughtcap;
using testing_support::TempDir;
using testing_support::throws_kind;

namespace {

const std::string kHeader =
    "id,name,technology,installed_capacity_mw,site_id,water_source,fuel,head_m,hydro_efficiency,"
    "net_efficiency,k_os,tl_max_c,dtl_max_c,n_cc,sigma,t_app_c,k_sens,gamma,c_t,hub_height_m,curve_id\n";

const std::string kThreeUnits = kHeader +
                                "H1,Dam,Hydro,50,S1,,,40,,,,,,,,,,,,,\n"
                                "T1,\"Steam, Unit 1\",SteamOnceThrough,400,S1,FreshSurface,NaturalGas,,,0.35,,,9,,,,,,,,\n"
                                "W1,Wind,Wind,100,S2,,,,,,,,,,,,,,,90,class_mid\n";

std::vector<Error> fleet_issues(const std::string& text) {
  std::istringstream in(text);
  Diagnostics diag;
  parse_fleet(csv::parse(in, "fleet.csv"), diag);
  return diag.issues;
}

TEST(Fleet, LoadsThreeGeneratorsWithDefaults) {
  TempDir dir;
  const FleetRegistry reg = load_fleet(dir.write("fleet.csv", kThreeUnits));
  ASSERT_EQ(reg.generators.size(), 3U);
  const auto& h = reg.generators.at("H1");
  EXPECT_EQ(h.technology, Technology::Hydro);
  EXPECT_EQ(h.hydro->efficiency, 0.90);
  EXPECT_EQ(h.hydro->head_m, 40.0);
  const auto& t = reg.generators.at("T1");
  EXPECT_EQ(t.name, "Steam, Unit 1");
  EXPECT_EQ(t.thermal->heat_sink_fraction, 0.20);
  EXPECT_EQ(t.thermal->stream_fraction, 0.30);
  EXPECT_EQ(t.thermal->max_discharge_temp_c, 32.0);
  EXPECT_EQ(t.thermal->max_condenser_rise_c, 9.0);
  EXPECT_EQ(reg.generators.at("W1").wind->curve_id, "class_mid");
}

TEST(Fleet, KosDefaultsByFuel) {
  EXPECT_EQ(defaults::heat_sink_fraction(Fuel::Coal), 0.12);
  EXPECT_EQ(defaults::heat_sink_fraction(Fuel::NaturalGas), 0.20);
  EXPECT_EQ(defaults::heat_sink_fraction(Fuel::Nuclear), 0.12);
}

TEST(Fleet, RoundTripsThroughWriter) {
  TempDir dir;
  const FleetRegistry first = load_fleet(dir.write("fleet.csv", kThreeUnits));
  std::ostringstream out;
  write_fleet(out, first.generators);
  const FleetRegistry second = load_fleet(dir.write("again.csv", out.str()));
  EXPECT_EQ(first.generators, second.generators);
}

TEST(Fleet, ShippedFixtureRoundTrips) {
  TempDir dir;
  const FleetRegistry first = load_fleet(testing_support::data_path("fixtures/fleet.csv"));
  EXPECT_EQ(first.generators.size(), 30U);
  std::ostringstream out;
  write_fleet(out, first.generators);
  EXPECT_EQ(load_fleet(dir.write("fleet.csv", out.str())).generators, first.generators);
}

TEST(Fleet, NetEfficiencyOutOfBounds) {
  const auto issues = fleet_issues(kHeader + "T1,x,SteamRecirculating,400,S1,FreshSurface,Coal,,,1.2,,,,,,,,,,,\n");
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues[0].kind(), ErrorKind::InvariantViolation);
  EXPECT_EQ(issues[0].context().row, 2);
  EXPECT_EQ(issues[0].context().field, "net_efficiency");
}

TEST(Fleet, HydroWithoutHead) {
  const auto issues = fleet_issues(kHeader + "H1,x,Hydro,50,S1,,,,,,,,,,,,,,,,\n");
  ASSERT_EQ(issues.size(), 1U);
  EXPECT_EQ(issues[0].kind(), ErrorKind::InvariantViolation);
  EXPECT_EQ(issues[0].context().field, "head_m");
}

TEST(Fleet, BadEnumAndMissingColumn) {
  const auto issues = fleet_issues(kHeader + "X1,x,Fusion,50,S1,,,,,,,,,,,,,,,,\n");
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues[0].kind(), ErrorKind::BadEnum);

  const auto missing = fleet_issues("id,name,technology\nA,b,Hydro\n");
  ASSERT_FALSE(missing.empty());
  EXPECT_EQ(missing[0].kind(), ErrorKind::MissingColumn);
}

TEST(Fleet, RangeChecks) {
  const auto issues = fleet_issues(kHeader +
                                   "R1,x,SteamRecirculating,400,S1,FreshSurface,Coal,,,0.5,0.6,,,1,2,,,,,,\n"
                                   "T1,x,SteamOnceThrough,400,S1,FreshSurface,Coal,,,0.3,,,,,,,,,,,\n"
                                   "P1,x,SolarPV,0,S1,,,,,,,,,,,,,,0.2,,\n");
  std::vector<std::string> fields;
  for (const auto& e : issues) fields.push_back(e.context().field.value_or(""));
  EXPECT_NE(std::find(fields.begin(), fields.end(), "net_efficiency"), fields.end());
  EXPECT_NE(std::find(fields.begin(), fields.end(), "n_cc"), fields.end());
  EXPECT_NE(std::find(fields.begin(), fields.end(), "sigma"), fields.end());
  EXPECT_NE(std::find(fields.begin(), fields.end(), "dtl_max_c"), fields.end());
  EXPECT_NE(std::find(fields.begin(), fields.end(), "installed_capacity_mw"), fields.end());
  EXPECT_NE(std::find(fields.begin(), fields.end(), "c_t"), fields.end());
}

TEST(Fleet, DuplicateIdsReported) {
  const auto issues = fleet_issues(kHeader + "H1,x,Hydro,50,S1,,,40,,,,,,,,,,,,,\nH1,y,Hydro,60,S1,,,40,,,,,,,,,,,,,\n");
  ASSERT_EQ(issues.size(), 1U);
  EXPECT_EQ(issues[0].context().row, 3);
}

TEST(Fleet, UnresolvedSiteNamesRow) {
  TempDir dir;
  InputPaths paths{dir.write("fleet.csv", kHeader + "H1,x,Hydro,50,S9,,,40,,,,,,,,,,,,,\n"),
                   dir.write("hydro.csv", "site_id,date,streamflow_m3s,water_temp_c\nS1,2025-06-01,10,20\n"),
                   dir.write("weather.csv",
                             "site_id,date,dry_bulb_c,rh_pct,pressure_kpa,irradiance_wm2,wind2_ms,wind10_ms,wind50_ms\n"),
                   "", ""};
  Diagnostics diag;
  inspect_inputs(paths, diag);
  ASSERT_EQ(diag.issues.size(), 1U);
  EXPECT_EQ(diag.issues[0].kind(), ErrorKind::UnresolvedSite);
  EXPECT_EQ(diag.issues[0].context().row, 2);
  EXPECT_TRUE(throws_kind([&] { load_registry(paths); }, ErrorKind::UnresolvedSite));
}

TEST(Fleet, SeriesGapsAndDuplicatesRejected) {
  auto issues = [](const std::string& body) {
    std::istringstream in("site_id,date,streamflow_m3s,water_temp_c\n" + body);
    Diagnostics diag;
    parse_hydrology(csv::parse(in, "hydro.csv"), diag);
    return diag.issues;
  };
  EXPECT_TRUE(issues("S1,2025-06-02,1,20\nS1,2025-06-01,1,20\n").empty());
  EXPECT_FALSE(issues("S1,2025-06-01,1,20\nS1,2025-06-03,1,20\n").empty());
  EXPECT_FALSE(issues("S1,2025-06-01,1,20\nS1,2025-06-01,2,20\n").empty());
  EXPECT_FALSE(issues("S1,2025-06-01,-1,20\n").empty());
  EXPECT_FALSE(issues("S1,2025-13-01,1,20\n").empty());
}

TEST(Fleet, LoadedSeriesAligned) {
  std::istringstream in("site_id,date,streamflow_m3s,water_temp_c\nS1,2025-06-02,2,21\nS1,2025-06-01,1,20\n");
  Diagnostics diag;
  const auto sites = parse_hydrology(csv::parse(in, "hydro.csv"), diag);
  ASSERT_TRUE(diag.ok());
  const auto& s = sites.at("S1");
  EXPECT_EQ(s.streamflow->start, *parse_date("2025-06-01"));
  EXPECT_EQ(s.streamflow->values, (std::vector<double>{1, 2}));
  EXPECT_EQ(s.water_temperature->values, (std::vector<double>{20, 21}));
}

TEST(Classification, AtRisk) {
  EXPECT_FALSE(classify_at_risk(Technology::SteamOnceThrough, WaterSource::Ocean));
  EXPECT_FALSE(classify_at_risk(Technology::SteamRecirculating, WaterSource::Ground));
  EXPECT_TRUE(classify_at_risk(Technology::SteamRecirculating, WaterSource::FreshSurface));
  EXPECT_TRUE(classify_at_risk(Technology::SteamOnceThrough, WaterSource::FreshSurface));
  EXPECT_TRUE(classify_at_risk(Technology::CombustionTurbine, WaterSource::None));
  EXPECT_TRUE(classify_at_risk(Technology::SolarPV, WaterSource::None));
  EXPECT_TRUE(classify_at_risk(Technology::Wind, WaterSource::None));
  EXPECT_TRUE(classify_at_risk(Technology::Hydro, WaterSource::None));
  EXPECT_FALSE(classify_at_risk(Technology::Other, WaterSource::FreshSurface));
}

TEST(Csv, QuotedFieldsAndNumbers) {
  EXPECT_EQ(csv::split_record("a,\"b,c\",\"d\"\"e\""), (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(csv::to_number("2.5"), 2.5);
  EXPECT_FALSE(csv::to_number("nan"));
  EXPECT_FALSE(csv::to_number("2.5x"));
  EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
}

TEST(Dates, ParseAndFormat) {
  EXPECT_EQ(format_date(*parse_date("2024-02-29")), "2024-02-29");
  EXPECT_FALSE(parse_date("2025-02-29"));
  EXPECT_FALSE(parse_date("2025-6-01"));
  const DateRange r{*parse_date("2025-06-01"), *parse_date("2025-08-31")};
  EXPECT_EQ(r.days(), 92U);
}

}  // namespace
