#include "minsurf/catenoid.hpp"

#include <cmath>

#include "minsurf/errors.hpp"
#include "minsurf/quadrature.hpp"
#include "minsurf/roots.hpp"

namespace minsurf::catenoid {

namespace {
constexpr double kCriticalBand = 1e-10;
constexpr double kStabilityTol = 1e-8;

double sech2(double v) {
  const double c = std::cosh(v);
  return 1.0 / (c * c);
}
}  // namespace

CriticalRatio critical_ratio() {
  const double w0 = find_root([](double w) { return w * std::tanh(w) - 1.0; }, 0.5, 2.0,
                              1e-14);
  return {w0, std::cosh(w0) / w0};
}

double area_coefficient(double w) {
  return 1.0 / w + std::sinh(2.0 * w) / (2.0 * w * w);
}

std::vector<CatenoidBranch> solve_branches(const RingProblem& p) {
  const auto [w0, rho_bar] = critical_ratio();
  auto make = [&](double w, BranchKind kind) {
    return CatenoidBranch{w, 1.0 / (2.0 * w), area_coefficient(w), kind};
  };
  if (std::abs(p.rho - rho_bar) <= kCriticalBand) return {make(w0, BranchKind::Critical)};
  if (p.rho < rho_bar) return {};
  auto f = [&](double w) { return std::cosh(w) - p.rho * w; };
  // f > 0 near 0, negative at w0, positive again for large w
  const double w1 = find_root(f, 1e-8, w0, 1e-13);
  double hi = 2.0 * w0;
  while (f(hi) < 0.0) hi *= 2.0;
  const double w2 = find_root(f, w0, hi, 1e-13);
  return {make(w1, BranchKind::Outer), make(w2, BranchKind::Inner)};
}

AreaComparison compare_areas(const CatenoidBranch& b1, const CatenoidBranch& b2) {
  const double dw = b2.w - b1.w;
  return {b2.area_coeff - b1.area_coeff, std::sinh(dw) - dw};
}

StabilityReport stability(const CatenoidBranch& b, int grid_points) {
  SLProblem prob;
  prob.potential = [](double v) { return -2.0 * sech2(v); };
  prob.a = -b.w;
  prob.b = b.w;
  auto eig = sl_eigen(prob, 0, 1e-12, grid_points);
  StabilityReport rep;
  rep.lowest_eigenvalue = eig.eigenvalue;
  rep.eigenfunction = std::move(eig.eigenfunction);
  rep.marginal = std::abs(eig.eigenvalue) <= kStabilityTol;
  rep.stable = eig.eigenvalue > kStabilityTol;
  return rep;
}

InstabilityMode instability_mode(double w2, int grid_points) {
  const double w0 = critical_ratio().w0;
  if (w2 <= w0) throw NoInstability("instability_mode: w2 <= w0, interval is stable");
  const double th = std::tanh(w2);
  auto boundary = [&](double k) {
    return std::cosh(k * w2) - th * std::sinh(k * w2) / k;
  };
  // boundary(0+) = 1 - w2 tanh w2 < 0; scan for the first sign change
  double lo = 1e-9, hi = 0.0;
  for (double k = 0.005; k < 50.0; k += 0.005) {
    if (boundary(k) > 0.0) {
      hi = k;
      break;
    }
    lo = k;
  }
  if (hi == 0.0) throw NotFound("instability_mode: no boundary zero located");
  const double k = find_root(boundary, lo, hi, 1e-14);
  InstabilityMode out;
  out.k = k;
  out.mode.x0 = -w2;
  out.mode.dx = 2.0 * w2 / (grid_points - 1);
  out.mode.samples.resize(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    const double v = out.mode.x(i);
    out.mode.samples[i] = std::cosh(k * v) - std::tanh(v) * std::sinh(k * v) / k;
  }
  return out;
}

PerturbedEigenvalue perturbative_eigenvalue(double eps) {
  const double w0 = critical_ratio().w0;
  const double w = w0 + eps;
  const double wt = w * std::tanh(w);
  return {-6.0 * (wt - 1.0) / (w * w * (3.0 - wt)), -3.0 * eps / w0};
}

IntegralIdentity jn_kn_identity() {
  const double w0 = critical_ratio().w0;
  IntegralIdentity out{};
  for (int n = 0; n <= 3; ++n) {
    out.j[n] = quad(
        [n](double v) {
          return std::pow(v * std::tanh(v), n) / std::pow(std::cosh(v), 2);
        },
        0.0, w0, 1e-14);
    if (n <= 2)
      out.k[n] = quad([n](double v) { return std::pow(v * std::tanh(v), n); }, 0.0, w0,
                      1e-14);
  }
  out.normalized = (out.j[0] - 3.0 * out.j[1] + 3.0 * out.j[2] - out.j[3]) * 4.0 /
                   (w0 * w0 * w0);
  // J_n = tanh(w0)/(n+1) - n/(n+1) K_{n-1} + n/(n+1) J_{n-1}
  const double t = std::tanh(w0);
  for (int n = 1; n <= 3; ++n) {
    const double pred = t / (n + 1.0) - n / (n + 1.0) * out.k[n - 1] +
                        n / (n + 1.0) * out.j[n - 1];
    out.recursion_residual[n - 1] = out.j[n] - pred;
  }
  return out;
}

double flat_direction_area(double gamma) {
  const double w0 = critical_ratio().w0;
  const double a0 = 1.0 / (2.0 * w0);  // lengths in units of d
  auto coeff = [&](double g) {
    auto integrand = [&](double v) {
      const double psi = 1.0 - v * std::tanh(v);
      const double dpsi = -std::tanh(v) - v * sech2(v);
      const double fv = std::cosh(v) * (1.0 + g * psi);
      const double fp = std::sinh(v) * (1.0 + g * psi) + g * std::cosh(v) * dpsi;
      return fv * std::sqrt(1.0 + fp * fp);
    };
    return 4.0 * a0 * a0 * quad(integrand, -w0, w0, 1e-14);
  };
  return coeff(gamma) - coeff(0.0);
}

}  // namespace minsurf::catenoid
