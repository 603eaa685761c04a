#include <cmath>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "droughtcap/aggregate.hpp"
#include "droughtcap/fleet_io.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace droughtcap;
using testing_support::data_path;
using testing_support::throws_kind;

namespace {

const DateRange kSummer{*parse_date("2025-06-01"), *parse_date("2025-08-31")};

const FleetRegistry& fixture() {
  static const FleetRegistry reg = load_registry({data_path("fixtures/fleet.csv"), data_path("fixtures/hydrology.csv"),
                                                  data_path("fixtures/weather.csv"), data_path("fixtures/curves.csv"),
                                                  data_path("pv_coeffs.csv")});
  return reg;
}

TEST(CapacityFactor, Arithmetic) {
  const std::vector<double> inst{100, 100};
  EXPECT_EQ(capacity_factor(std::vector<double>{100, 100}, inst), 1.0);
  EXPECT_EQ(capacity_factor(std::vector<double>{0, 0}, inst), 0.0);
  EXPECT_EQ(capacity_factor(std::vector<double>{50, 100}, inst), 0.75);
}

TEST(CapacityFactor, Errors) {
  EXPECT_TRUE(throws_kind([] { capacity_factor(std::vector<double>{}, std::vector<double>{}); },
                          ErrorKind::EmptyCategory));
  EXPECT_TRUE(throws_kind([] { capacity_factor(std::vector<double>{1}, std::vector<double>{1, 2}); },
                          ErrorKind::DegenerateInput));
  EXPECT_TRUE(throws_kind([] { capacity_factor(std::vector<double>{120}, std::vector<double>{100}); },
                          ErrorKind::InvariantViolation));
}

TEST(Summary, MedianMinMax) {
  const auto odd = summarize({3, 1, 2});
  EXPECT_EQ(odd.median, 2);
  EXPECT_EQ(odd.min, 1);
  EXPECT_EQ(odd.max, 3);
  EXPECT_EQ(summarize({4, 1, 2, 3}).median, 2.5);
}

TEST(Correlation, ProportionalBasin) {
  const std::vector<double> flow{120, 80, 95, 140, 60, 101};
  std::vector<double> gen;
  for (double q : flow) gen.push_back(3.7 * q);
  const auto fit = flow_generation_correlation(flow, gen);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-9);
  EXPECT_NEAR(fit.slope, 1.0, 1e-12);
  EXPECT_NEAR(fit.intercept, 0.0, 1e-12);
}

TEST(Correlation, ConstantGeneration) {
  const std::vector<double> flow{120, 80, 95, 140, 60};
  const std::vector<double> gen(5, 42.0);
  EXPECT_EQ(flow_generation_correlation(flow, gen).r_squared, 0.0);
}

TEST(Correlation, DegenerateInputs) {
  const std::vector<double> two{1, 2};
  const std::vector<double> flat{5, 5, 5};
  const std::vector<double> three{1, 2, 3};
  const std::vector<double> zeros{0, 0, 0};
  EXPECT_TRUE(throws_kind([&] { flow_generation_correlation(two, two); }, ErrorKind::DegenerateInput));
  EXPECT_TRUE(throws_kind([&] { flow_generation_correlation(flat, three); }, ErrorKind::DegenerateInput));
  EXPECT_TRUE(throws_kind([&] { flow_generation_correlation(three, zeros); }, ErrorKind::DegenerateInput));
  EXPECT_TRUE(throws_kind([&] { flow_generation_correlation(three, two); }, ErrorKind::DegenerateInput));
}

TEST(Correlation, NoisyBasinMatchesRawSumsOracle) {
  oracle::Draw draw(91);
  std::vector<double> flow;
  std::vector<double> gen;
  for (int i = 0; i < 20; ++i) {
    flow.push_back(draw(50, 150));
    gen.push_back(0.8 * flow.back() + draw(-20, 20));
  }
  const auto fit = flow_generation_correlation(flow, gen);
  const double fm = std::accumulate(flow.begin(), flow.end(), 0.0) / 20;
  const double gm = std::accumulate(gen.begin(), gen.end(), 0.0) / 20;
  std::vector<double> x, y;
  for (int i = 0; i < 20; ++i) {
    x.push_back(flow[i] / fm);
    y.push_back(gen[i] / gm);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < 20; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (20 * sxy - sx * sy) / (20 * sxx - sx * sx);
  EXPECT_NEAR(fit.r_squared, oracle::r_squared(x, y), 1e-9);
  EXPECT_NEAR(fit.slope, slope, 1e-9);
  EXPECT_NEAR(fit.intercept, (sy - slope * sx) / 20, 1e-9);
}

TEST(ParallelFor, RethrowsLowestIndex) {
  for (unsigned jobs : {1U, 4U}) {
    try {
      parallel_for(50, jobs, [](std::size_t i) {
        if (i == 7 || i == 31) throw std::runtime_error(std::to_string(i));
      });
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "7");
    }
  }
}

TEST(Derate, HydroWithAdequateFlowIsAtNameplate) {
  FleetRegistry reg;
  GeneratorRecord g{.id = "H", .technology = Technology::Hydro, .installed_capacity_mw = 10, .site_id = "S"};
  g.hydro = HydroSpec{.head_m = 50};
  reg.generators["H"] = g;
  const DateRange range{*parse_date("2025-06-01"), *parse_date("2025-06-10")};
  reg.hydrology["S"] = {"S", DailySeries{range.first, std::vector<double>(10, 500.0), Unit::m3_per_s}, std::nullopt};
  const auto r = derate_fleet(reg, range);
  for (double cf : r.categories.at(Technology::Hydro).capacity_factor.values) EXPECT_EQ(cf, 1.0);
}

TEST(Derate, MissingChannelNamesGeneratorSiteAndChannel) {
  FleetRegistry reg = fixture();
  reg.weather.at("S02").irradiance.reset();
  try {
    derate_fleet(reg, kSummer);
    FAIL() << "expected MissingSeries";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingSeries);
    EXPECT_EQ(e.context().generator, "P01");
    EXPECT_EQ(e.context().site, "S02");
    EXPECT_EQ(e.context().channel, "irradiance");
  }
}

TEST(Derate, ShortSeriesIsMissing) {
  const DateRange longer{kSummer.first, *parse_date("2025-09-05")};
  EXPECT_TRUE(throws_kind([&] { derate_fleet(fixture(), longer); }, ErrorKind::MissingSeries));
}

TEST(Derate, ModuleErrorsAnnotatedWithDate) {
  FleetRegistry reg = fixture();
  reg.hydrology.at("S01").streamflow->values[3] = -1.0;
  try {
    derate_fleet(reg, kSummer);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeFlow);
    EXPECT_EQ(e.context().date, "2025-06-04");
    EXPECT_TRUE(e.context().generator);
  }
}

TEST(Derate, FixtureMatchesDirectModuleCalls) {
  const FleetRegistry& reg = fixture();
  const auto r = derate_fleet(reg, kSummer);
  ASSERT_EQ(r.generators.size(), 30U);
  for (const auto& gs : r.generators) {
    const GeneratorRecord& g = reg.generators.at(gs.id);
    const auto hyd = reg.hydrology.find(g.site_id);
    const auto wx = reg.weather.find(g.site_id);
    for (std::size_t d = 0; d < kSummer.days(); ++d) {
      double expected = g.installed_capacity_mw;
      auto h = [&](const std::optional<DailySeries>& s) { return s->values[d]; };
      if (!classify_at_risk(g)) {
        expected = g.installed_capacity_mw;
      } else if (g.technology == Technology::Hydro) {
        expected = hydro::usable_capacity(hydro_params(g), h(hyd->second.streamflow));
      } else if (g.technology == Technology::SteamOnceThrough) {
        expected = once_through::usable_capacity(once_through_params(g), h(hyd->second.streamflow),
                                                 h(hyd->second.water_temperature));
      } else if (g.technology == Technology::SteamRecirculating) {
        const auto air = psychro::air_state(h(wx->second.dry_bulb), h(wx->second.relative_humidity),
                                            h(wx->second.pressure));
        expected = recirc::usable_capacity(recirc_params(g), h(hyd->second.streamflow),
                                           h(hyd->second.water_temperature), air);
      } else if (g.technology == Technology::CombustionTurbine) {
        expected = ct::usable_capacity(ct_params(g), h(wx->second.dry_bulb));
      } else if (g.technology == Technology::SolarPV) {
        expected = pv::power(pv_params(g, reg), h(wx->second.irradiance), h(wx->second.dry_bulb));
      } else if (g.technology == Technology::Wind) {
        expected = wind::usable_capacity(wind_params(g), reg.wind_curves, h(wx->second.wind_2m),
                                         h(wx->second.wind_10m), h(wx->second.wind_50m));
      }
      ASSERT_EQ(gs.available.values[d], expected) << gs.id << " day " << d;
    }
  }
}

TEST(Derate, NonAtRiskUnitsReportNameplate) {
  const auto r = derate_fleet(fixture(), kSummer);
  for (const auto& gs : r.generators) {
    if (gs.id == "T05" || gs.id == "R05" || gs.id == "O01") {
      EXPECT_FALSE(gs.at_risk);
      for (double v : gs.available.values) EXPECT_EQ(v, gs.installed_mw);
    }
  }
}

TEST(Derate, CanonicalOrder) {
  const auto r = derate_fleet(fixture(), kSummer);
  for (std::size_t i = 1; i < r.generators.size(); ++i) {
    const auto& a = r.generators[i - 1];
    const auto& b = r.generators[i];
    EXPECT_TRUE(a.category < b.category || (a.category == b.category && a.id < b.id));
  }
}

TEST(DerateProperty, ConservationAndBounds) {
  for (unsigned jobs : {1U, 3U}) {
    const auto r = derate_fleet(fixture(), kSummer, {.jobs = jobs});
    for (std::size_t d = 0; d < kSummer.days(); ++d) {
      double by_generator = 0.0;
      for (const auto& gs : r.generators) {
        by_generator += gs.available.values[d];
        EXPECT_GE(gs.available.values[d], 0.0);
        EXPECT_LE(gs.available.values[d], gs.installed_mw);
      }
      EXPECT_EQ(r.fleet_total.values[d], by_generator);
      double by_category = 0.0;
      for (const auto& [tech, cat] : r.categories) {
        by_category += cat.total_mw.values[d];
        EXPECT_GE(cat.capacity_factor.values[d], 0.0);
        EXPECT_LE(cat.capacity_factor.values[d], 1.0);
      }
      EXPECT_NEAR(r.fleet_total.values[d], by_category, 1e-9 * by_category);
      EXPECT_GE(r.fleet_cf.values[d], 0.0);
      EXPECT_LE(r.fleet_cf.values[d], 1.0);
    }
  }
}

TEST(DerateProperty, IndependentOfJobCount) {
  const auto a = derate_fleet(fixture(), kSummer, {.jobs = 1});
  const auto b = derate_fleet(fixture(), kSummer, {.jobs = 8});
  ASSERT_EQ(a.generators.size(), b.generators.size());
  for (std::size_t i = 0; i < a.generators.size(); ++i) EXPECT_EQ(a.generators[i].available, b.generators[i].available);
  EXPECT_EQ(a.fleet_total, b.fleet_total);
}

}  // namespace
