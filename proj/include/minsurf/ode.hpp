// Classical fixed-step RK4 on std::vector states.
#ifndef MINSURF_ODE_HPP
#define MINSURF_ODE_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

using State = std::vector<double>;
using Field = std::function<State(double, const State&)>;

inline bool all_finite(const State& s) {
  for (double v : s)
    if (!std::isfinite(v)) return false;
  return true;
}

// Trajectory of length steps+1 including the initial state.  A non-finite
// state aborts with Blowup carrying the last finite time.
inline std::vector<State> rk4_integrate(const Field& field, State state0, double t0,
                                        double t1, int steps) {
  const double h = (t1 - t0) / steps;
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(state0);
  State y = std::move(state0);
  const std::size_t n = y.size();
  State k1, k2, k3, k4, tmp(n);
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + h * i;
    k1 = field(t, y);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    k2 = field(t + 0.5 * h, tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    k3 = field(t + 0.5 * h, tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = y[j] + h * k3[j];
    k4 = field(t + h, tmp);
    for (std::size_t j = 0; j < n; ++j)
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    if (!all_finite(y)) throw Blowup("rk4_integrate: state left finite range", t);
    out.push_back(y);
  }
  return out;
}

}  // namespace minsurf

#endif
