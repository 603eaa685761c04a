#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "droughtcap/error.hpp"

namespace droughtcap::wind {

struct CurvePoint {
  double speed_ms{};
  double power_fraction{};
  bool operator==(const CurvePoint&) const = default;
};

/// Manufacturer power curve normalized to rated power. Build with
/// `make_curve`, which infers cut-in/cut-out and checks the invariants.
struct WindPowerCurve {
  std::string curve_id;
  std::vector<CurvePoint> points;
  double cut_in{};
  double cut_out{};
  bool operator==(const WindPowerCurve&) const = default;
};

struct WindParams {
  double installed_capacity_mw{};
  double hub_height_m{};
  std::string curve_id;
};

/// Validates the knots and infers cut-in (last zero knot before the first
/// nonzero one) and cut-out (first zero knot after the last nonzero one).
inline WindPowerCurve make_curve(std::string curve_id, std::vector<CurvePoint> points) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::InvariantViolation, "curve " + curve_id + ": " + what, {.field = "curve_id"});
  };
  if (points.size() < 3) fail("needs at least 3 points");
  double max_fraction = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    if (!std::isfinite(pt.speed_ms) || pt.speed_ms < 0.0) fail("speeds must be finite and >= 0");
    if (!(pt.power_fraction >= 0.0 && pt.power_fraction <= 1.0)) fail("power_fraction outside [0, 1]");
    if (i > 0 && !(pt.speed_ms > points[i - 1].speed_ms)) fail("speeds must be strictly increasing");
    max_fraction = std::max(max_fraction, pt.power_fraction);
  }
  if (max_fraction != 1.0) fail("maximum power_fraction must be 1");
  if (points.front().power_fraction != 0.0) fail("first knot must have zero power (cut-in)");
  if (points.back().power_fraction != 0.0) fail("last knot must have zero power (cut-out)");

  const auto first_nonzero = std::find_if(points.begin(), points.end(),
                                          [](const CurvePoint& p) { return p.power_fraction > 0.0; });
  const auto last_nonzero = std::find_if(points.rbegin(), points.rend(),
                                         [](const CurvePoint& p) { return p.power_fraction > 0.0; });
  for (auto it = first_nonzero; it != last_nonzero.base(); ++it) {
    if (it->power_fraction == 0.0) fail("zero-power knot inside the operating range");
  }

  WindPowerCurve curve;
  curve.curve_id = std::move(curve_id);
  curve.cut_in = std::prev(first_nonzero)->speed_ms;
  curve.cut_out = last_nonzero.base()->speed_ms;
  curve.points = std::move(points);
  return curve;
}

inline constexpr std::array<double, 3> kMeasurementHeights{2.0, 10.0, 50.0};

/// Least-squares fit of v(z) = a + b ln z through the 2/10/50 m speeds,
/// evaluated at the hub height and floored at zero.
inline double extrapolate_hub_speed(double v2, double v10, double v50, double hub_m) {
  if (v2 < 0.0 || v10 < 0.0 || v50 < 0.0) throw Error(ErrorKind::NegativeSpeed, "wind speeds must be >= 0");
  if (!(hub_m > 0.0)) throw Error(ErrorKind::OutOfRange, "hub height must be > 0");
  if (v2 == 0.0 && v10 == 0.0 && v50 == 0.0) return 0.0;

  const std::array<double, 3> v{v2, v10, v50};
  double mean_x = 0.0;
  double mean_v = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    mean_x += std::log(kMeasurementHeights[i]);
    mean_v += v[i];
  }
  mean_x /= 3.0;
  mean_v /= 3.0;
  double sxx = 0.0;
  double sxv = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double dx = std::log(kMeasurementHeights[i]) - mean_x;
    sxx += dx * dx;
    sxv += dx * (v[i] - mean_v);
  }
  const double slope = sxv / sxx;
  return std::max(mean_v + slope * (std::log(hub_m) - mean_x), 0.0);
}

/// Normalized output at hub speed `v`. Linear between knots; the last nonzero
/// fraction holds up to cut-out, where output drops to zero.
inline double power_from_curve(const WindPowerCurve& curve, double v) {
  if (v < 0.0) throw Error(ErrorKind::NegativeSpeed, "wind speed must be >= 0");
  if (v <= curve.cut_in || v >= curve.cut_out) return 0.0;
  const auto& pts = curve.points;
  const auto upper = std::upper_bound(pts.begin(), pts.end(), v,
                                      [](double s, const CurvePoint& p) { return s < p.speed_ms; });
  const auto& hi = *upper;
  const auto& lo = *std::prev(upper);
  if (lo.speed_ms == v) return lo.power_fraction;
  if (hi.speed_ms >= curve.cut_out) return lo.power_fraction;
  const double t = (v - lo.speed_ms) / (hi.speed_ms - lo.speed_ms);
  return lo.power_fraction + t * (hi.power_fraction - lo.power_fraction);
}

inline double usable_capacity(const WindParams& p, const std::map<std::string, WindPowerCurve>& curves,
                              double v2, double v10, double v50) {
  const auto it = curves.find(p.curve_id);
  if (it == curves.end()) throw Error(ErrorKind::UnknownCurve, "no power curve '" + p.curve_id + "'");
  const double hub_speed = extrapolate_hub_speed(v2, v10, v50, p.hub_height_m);
  return p.installed_capacity_mw * power_from_curve(it->second, hub_speed);
}

}  // namespace droughtcap::wind
