// Uniformly sampled function of one real variable.
#ifndef MINSURF_GRID_HPP
#define MINSURF_GRID_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace minsurf {

// On a periodic grid samples[0] sits at x0 and the domain wraps at x0 + n*dx,
// so samples.size() excludes the duplicate endpoint.
struct GridFunction {
  std::vector<double> samples;
  double x0 = 0.0;
  double dx = 1.0;
  bool periodic = false;

  std::size_t size() const { return samples.size(); }
  double x(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
  double back_x() const { return x(samples.size() - 1); }

  double max_abs() const {
    double m = 0.0;
    for (double v : samples) m = std::max(m, std::abs(v));
    return m;
  }

  // Cubic interpolation (Catmull-Rom); clamps to the valid stencil range on
  // bounded grids, wraps on periodic ones.
  double operator()(double x_query) const {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(samples.size());
    assert(n >= 2);
    double s = (x_query - x0) / dx;
    auto at = [&](std::ptrdiff_t i) {
      if (periodic) {
        i %= n;
        if (i < 0) i += n;
        return samples[static_cast<std::size_t>(i)];
      }
      if (i < 0) i = 0;
      if (i > n - 1) i = n - 1;
      return samples[static_cast<std::size_t>(i)];
    };
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::floor(s));
    if (!periodic) {
      if (i < 0) i = 0;
      if (i > n - 2) i = n - 2;
    }
    const double t = s - static_cast<double>(i);
    const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
    return p1 + 0.5 * t * (p2 - p0 + t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                          t * (3.0 * (p1 - p2) + p3 - p0)));
  }
};

}  // namespace minsurf

#endif
