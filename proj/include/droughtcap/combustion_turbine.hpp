#pragma once

#include <algorithm>

namespace droughtcap::ct {

struct CtParams {
  double installed_capacity_mw{};
  double coefficient{0.0083};  // 1/degC
  double intercept{1.15};
};

/// Unclamped output fraction at ambient dry bulb `t_d`.
inline double capacity_factor_unclamped(const CtParams& p, double t_d) {
  return -p.coefficient * t_d + p.intercept;
}

inline double usable_capacity(const CtParams& p, double t_d) {
  return std::clamp(p.installed_capacity_mw * capacity_factor_unclamped(p, t_d), 0.0,
                    p.installed_capacity_mw);
}

}  // namespace droughtcap::ct
