#include "minsurf/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/roots.hpp"

namespace minsurf {
namespace {

struct Shot {
  std::vector<double> psi;  // samples on the traversed nodes
  double dpsi_end = 0.0;
  int nodes = 0;
};

// RK4 on (psi, psi') with psi'' = (V - E) psi, from grid node i0 to i1
// (i1 may be smaller; h then negative).  Rescales to avoid overflow; node
// count is unaffected since the factor is positive.
Shot shoot(const std::function<double(double)>& V, double E, double x0, double h,
           int i0, int i1) {
  Shot s;
  const int n = std::abs(i1 - i0);
  const int dir = (i1 > i0) ? 1 : -1;
  const double step = h * dir;
  double psi = 0.0, dpsi = dir > 0 ? 1.0 : -1.0;
  s.psi.reserve(n + 1);
  s.psi.push_back(psi);
  double prev_sign = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = x0 + (i0 + dir * k) * h;
    auto f = [&](double xi, double p, double dp, double& kp, double& kdp) {
      kp = dp;
      kdp = (V(xi) - E) * p;
    };
    double k1p, k1d, k2p, k2d, k3p, k3d, k4p, k4d;
    f(x, psi, dpsi, k1p, k1d);
    f(x + 0.5 * step, psi + 0.5 * step * k1p, dpsi + 0.5 * step * k1d, k2p, k2d);
    f(x + 0.5 * step, psi + 0.5 * step * k2p, dpsi + 0.5 * step * k2d, k3p, k3d);
    f(x + step, psi + step * k3p, dpsi + step * k3d, k4p, k4d);
    psi += step / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    dpsi += step / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    const double mag = std::max(std::abs(psi), std::abs(dpsi));
    if (mag > 1e200) {
      const double f0 = 1.0 / mag;
      psi *= f0;
      dpsi *= f0;
      for (double& v : s.psi) v *= f0;
    }
    const double sign = psi > 0 ? 1.0 : (psi < 0 ? -1.0 : 0.0);
    if (sign != 0.0 && prev_sign != 0.0 && sign != prev_sign) ++s.nodes;
    if (sign != 0.0) prev_sign = sign;
    s.psi.push_back(psi);
  }
  s.dpsi_end = dpsi;
  return s;
}

}  // namespace

EigenResult sl_eigen(const SLProblem& problem, int index, double tol, int grid_points) {
  const double a = problem.a, b = problem.b;
  const int n = grid_points;
  const double h = (b - a) / n;
  const int im = n / 2;  // matching node (interval midpoint)
  const auto& V = problem.potential;

  auto count_nodes = [&](double E) {
    return shoot(V, E, a, h, 0, n).nodes;
  };
  // Wronskian mismatch of left and right shots at the matching node.
  auto mismatch = [&](double E) {
    Shot left = shoot(V, E, a, h, 0, im);
    Shot right = shoot(V, E, a, h, n, im);
    const double pl = left.psi.back(), pr = right.psi.back();
    const double nl = std::max(std::abs(pl), std::abs(left.dpsi_end));
    const double nr = std::max(std::abs(pr), std::abs(right.dpsi_end));
    return (left.dpsi_end / nl) * (pr / nr) - (right.dpsi_end / nr) * (pl / nl);
  };

  // Bracket the index-th eigenvalue by node count: nodes(E) jumps from
  // index to index+1 as E crosses it.
  double vmin = V(a), vmax = V(a);
  for (int i = 1; i <= 64; ++i) {
    const double v = V(a + (b - a) * i / 64.0);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  double lo = vmin - 1.0;
  while (count_nodes(lo) > index) {
    lo -= 2.0 * (vmax - lo + 1.0);
    if (lo < vmin - 1e8) throw NotFound("sl_eigen: lower bracket not found");
  }
  double span = std::max(1.0, vmax - vmin);
  double hi = vmax + span;
  for (int tries = 0;; ++tries) {
    if (count_nodes(hi) > index) break;
    hi += span;
    span *= 2.0;
    if (tries > 60) throw NotFound("sl_eigen: upper bracket not found in scan range");
  }
  while (hi - lo > std::max(tol, 1e-13 * std::max(1.0, std::abs(hi) + std::abs(lo)))) {
    const double mid = 0.5 * (lo + hi);
    if (count_nodes(mid) > index)
      hi = mid;
    else
      lo = mid;
  }
  double E = 0.5 * (lo + hi);
  // Polish on the smooth mismatch within a slightly widened bracket.
  const double pad = 10.0 * std::max(hi - lo, 1e-14);
  try {
    E = find_root([&](double e) { return mismatch(e); }, E - pad, E + pad,
                  1e-14 * std::max(1.0, std::abs(E)));
  } catch (const NoBracket&) {
    // node-count bisection already pinned it to tolerance
  }

  // Assemble the eigenfunction from both shots, glued at the midpoint.
  Shot left = shoot(V, E, a, h, 0, im);
  Shot right = shoot(V, E, a, h, n, im);
  GridFunction fn;
  fn.x0 = a;
  fn.dx = h;
  fn.samples.assign(n + 1, 0.0);
  for (int i = 0; i <= im; ++i) fn.samples[i] = left.psi[i];
  const double pl = left.psi.back(), pr = right.psi.back();
  double lpeak = 0.0, rpeak = 0.0;
  for (double v : left.psi) lpeak = std::max(lpeak, std::abs(v));
  for (double v : right.psi) rpeak = std::max(rpeak, std::abs(v));
  // Near an interior node at the matching point the value ratio is 0/0;
  // the derivative ratio is then the conditioned one.
  double scale;
  if (std::abs(pl) > 1e-3 * lpeak && std::abs(pr) > 1e-3 * rpeak)
    scale = pl / pr;
  else
    scale = left.dpsi_end / right.dpsi_end;
  for (int i = 0; i <= n - im; ++i) {
    const double v = right.psi[i] * scale;
    if (n - i > im) fn.samples[n - i] = v;
  }
  // peak-normalize with positive peak
  double peak = 0.0;
  for (double v : fn.samples)
    if (std::abs(v) > std::abs(peak)) peak = v;
  if (peak != 0.0)
    for (double& v : fn.samples) v /= peak;

  EigenResult res;
  res.eigenvalue = E;
  res.eigenfunction = std::move(fn);
  res.index = 0;
  double prev = 0.0;
  for (std::size_t i = 1; i + 1 < res.eigenfunction.samples.size(); ++i) {
    const double v = res.eigenfunction.samples[i];
    const double sign = v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
    if (sign != 0.0 && prev != 0.0 && sign != prev) ++res.index;
    if (sign != 0.0) prev = sign;
  }
  return res;
}

}  // namespace minsurf
