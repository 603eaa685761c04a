#include <cmath>

#include <gtest/gtest.h>

#include "droughtcap/pv.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace droughtcap;
using namespace droughtcap::pv;
using testing_support::throws_kind;

namespace {

const PvParams kArray{.installed_capacity_mw = 50.0};

TEST(Pv, ModuleTemperature) {
  EXPECT_EQ(module_temperature(21.0, 0.0, 0.035), 21.0);
  EXPECT_DOUBLE_EQ(module_temperature(25.0, 1000.0, 0.035), 60.0);
  EXPECT_EQ(module_temperature(-10.0, 1000.0, 0.035), 25.0);
  EXPECT_TRUE(throws_kind([] { module_temperature(20.0, -1.0, 0.035); }, ErrorKind::NegativeIrradiance));
}

TEST(Pv, RelativeEfficiency) {
  const auto& k = kCrystallineSilicon;
  EXPECT_EQ(relative_efficiency(1.0, 0.0, k), 1.0);
  EXPECT_NEAR(relative_efficiency(1.0, 10.0, k), 0.95348, 1e-12);
  EXPECT_LT(relative_efficiency(1.0, 10.0, k), 1.0);
  EXPECT_NEAR(relative_efficiency(0.5, 0.0, k), 0.9925062467431117, 1e-12);
  EXPECT_TRUE(throws_kind([&] { relative_efficiency(0.0, 0.0, k); }, ErrorKind::NonpositiveIrradiance));
}

TEST(Pv, Power) {
  EXPECT_EQ(power(kArray, 0.0, 30.0), 0.0);
  EXPECT_EQ(power(kArray, 1000.0, -10.0), kArray.installed_capacity_mw);
  EXPECT_LT(power(kArray, 800.0, 30.0), 0.8 * kArray.installed_capacity_mw);
  EXPECT_TRUE(throws_kind([] { power(kArray, -5.0, 30.0); }, ErrorKind::NegativeIrradiance));
}

TEST(PvProperty, DecreasingInAmbientAndBounded) {
  oracle::Draw draw(61);
  for (int i = 0; i < 1000; ++i) {
    PvParams p{draw(1, 300), draw(0.025, 0.05), kCrystallineSilicon};
    const double g = draw(200, kStcIrradiance);
    const double t = draw(0, 44);
    const double hot = power(p, g, t + draw(0.05, 1));
    const double cool = power(p, g, t);
    EXPECT_LT(hot, cool);
    EXPECT_GE(hot, 0.0);
    EXPECT_LE(cool, p.installed_capacity_mw);
  }
}

}  // namespace
