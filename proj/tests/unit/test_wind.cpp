#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "droughtcap/wind.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace droughtcap;
using namespace droughtcap::wind;
using testing_support::throws_kind;

namespace {

WindPowerCurve test_curve() {
  return make_curve("t", {{0, 0}, {3, 0}, {5, 0.2}, {7, 0.6}, {10, 1}, {20, 1}, {25, 0}});
}

TEST(Wind, CurveInference) {
  const auto c = test_curve();
  EXPECT_EQ(c.cut_in, 3.0);
  EXPECT_EQ(c.cut_out, 25.0);
}

TEST(Wind, CurveValidation) {
  auto bad = [](std::vector<CurvePoint> pts) {
    return throws_kind([&] { make_curve("x", pts); }, ErrorKind::InvariantViolation);
  };
  EXPECT_TRUE(bad({{0, 0}, {5, 1}}));
  EXPECT_TRUE(bad({{0, 0}, {5, 0.8}, {25, 0}}));
  EXPECT_TRUE(bad({{0, 0}, {5, 1.2}, {25, 0}}));
  EXPECT_TRUE(bad({{0, 0}, {5, 1}, {5, 1}, {25, 0}}));
  EXPECT_TRUE(bad({{0, 0.1}, {5, 1}, {25, 0}}));
  EXPECT_TRUE(bad({{0, 0}, {5, 1}, {25, 0.5}}));
  EXPECT_TRUE(bad({{0, 0}, {5, 1}, {6, 0}, {7, 1}, {25, 0}}));
}

TEST(Wind, PowerFromCurve) {
  const auto c = test_curve();
  EXPECT_EQ(power_from_curve(c, 0.0), 0.0);
  EXPECT_EQ(power_from_curve(c, 2.9), 0.0);
  EXPECT_EQ(power_from_curve(c, 5.0), 0.2);
  EXPECT_EQ(power_from_curve(c, 7.0), 0.6);
  EXPECT_DOUBLE_EQ(power_from_curve(c, 6.0), 0.4);
  EXPECT_EQ(power_from_curve(c, 15.0), 1.0);
  EXPECT_EQ(power_from_curve(c, 24.99), 1.0);
  EXPECT_EQ(power_from_curve(c, 25.0), 0.0);
  EXPECT_EQ(power_from_curve(c, 30.0), 0.0);
  EXPECT_TRUE(throws_kind([&] { power_from_curve(c, -1.0); }, ErrorKind::NegativeSpeed));
}

TEST(Wind, HubExtrapolation) {
  EXPECT_NEAR(extrapolate_hub_speed(3, 5, 7, 100), 7.861353116147, 1e-9);
  EXPECT_NEAR(extrapolate_hub_speed(3, 5, 7, 100), oracle::log_fit({2, 10, 50}, {3, 5, 7}, 100), 1e-12);
  EXPECT_NEAR(extrapolate_hub_speed(8, 8, 8, 120), 8.0, 1e-12);
  EXPECT_EQ(extrapolate_hub_speed(0, 0, 0, 80), 0.0);
  EXPECT_TRUE(throws_kind([] { extrapolate_hub_speed(-1, 2, 3, 80); }, ErrorKind::NegativeSpeed));
  // Strongly decreasing profile extrapolates below zero and is floored.
  EXPECT_EQ(extrapolate_hub_speed(9, 2, 0.1, 200), 0.0);
}

TEST(Wind, UsableCapacity) {
  const std::map<std::string, WindPowerCurve> curves{{"t", test_curve()}};
  const WindParams p{.installed_capacity_mw = 200, .hub_height_m = 50, .curve_id = "t"};
  EXPECT_EQ(usable_capacity(p, curves, 0, 0, 0), 0.0);
  EXPECT_NEAR(usable_capacity(p, curves, 12, 12, 12), 200.0, 1e-9);
  EXPECT_EQ(usable_capacity(p, curves, 27, 27, 27), 0.0);
  const WindParams missing{.installed_capacity_mw = 200, .hub_height_m = 50, .curve_id = "nope"};
  EXPECT_TRUE(throws_kind([&] { usable_capacity(missing, curves, 5, 6, 7); }, ErrorKind::UnknownCurve));
}

TEST(WindProperty, ExactOnLogProfiles) {
  oracle::Draw draw(71);
  for (int i = 0; i < 1000; ++i) {
    const double a = draw(0, 10);
    const double b = draw(0, 3);
    auto v = [&](double z) { return a + b * std::log(z); };
    const double hub = draw(10, 200);
    EXPECT_NEAR(extrapolate_hub_speed(v(2), v(10), v(50), hub), v(hub), 1e-9);
    EXPECT_NEAR(extrapolate_hub_speed(v(2), v(10), v(50), 50), v(50), 1e-9);
  }
}

TEST(WindProperty, ZeroOutsideOperatingRange) {
  oracle::Draw draw(72);
  const auto c = test_curve();
  for (int i = 0; i < 1000; ++i) {
    const double below = draw(0, c.cut_in);
    const double above = draw(c.cut_out, 60);
    EXPECT_EQ(power_from_curve(c, below), 0.0);
    EXPECT_EQ(power_from_curve(c, above), 0.0);
    const double inside = power_from_curve(c, draw(c.cut_in, c.cut_out));
    EXPECT_GE(inside, 0.0);
    EXPECT_LE(inside, 1.0);
  }
}

}  // namespace
