// Central finite differences for first/second derivatives and mixed partials.
#ifndef MINSURF_FD_HPP
#define MINSURF_FD_HPP

#include <functional>
#include <vector>

namespace minsurf {

inline double fd_deriv1(const std::function<double(double)>& f, double x,
                        double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double fd_deriv2(const std::function<double(double)>& f, double x,
                        double h = 1e-4) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// d^2 f / dx_i dx_j of a multivariate scalar via the 4-point stencil.
inline double fd_mixed(const std::function<double(const std::vector<double>&)>& f,
                       std::vector<double> x, int i, int j, double h = 1e-4) {
  if (i == j) {
    const double f0 = f(x);
    x[i] += h;
    const double fp = f(x);
    x[i] -= 2.0 * h;
    const double fm = f(x);
    return (fp - 2.0 * f0 + fm) / (h * h);
  }
  auto shift = [&](double si, double sj) {
    std::vector<double> y = x;
    y[i] += si;
    y[j] += sj;
    return f(y);
  };
  return (shift(h, h) - shift(h, -h) - shift(-h, h) + shift(-h, -h)) / (4.0 * h * h);
}

}  // namespace minsurf

#endif
