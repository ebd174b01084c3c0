// Bracketed scalar root finding: bounded secant/Newton steps with a
// bisection fallback that guarantees convergence.
#ifndef MINSURF_ROOTS_HPP
#define MINSURF_ROOTS_HPP

#include <cmath>
#include <functional>

#include "minsurf/errors.hpp"

namespace minsurf {

inline double find_root(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb))
    throw NoBracket("find_root: no sign change on [a,b]");
  for (int it = 0; it < 400 && (b - a) > tol; ++it) {
    // secant proposal, kept only if it lands well inside the bracket;
    // every other step bisects so the bracket provably shrinks
    double m = 0.5 * (a + b);
    const double denom = fb - fa;
    if (it % 2 == 0 && denom != 0.0) {
      const double s = a - fa * (b - a) / denom;
      const double margin = 0.01 * (b - a);
      if (s > a + margin && s < b - margin) m = s;
    }
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (std::signbit(fm) == std::signbit(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace minsurf

#endif
