#include "minsurf/soliton_spectrum.hpp"

#include <cmath>

#include "minsurf/errors.hpp"
#include "minsurf/quadrature.hpp"
#include "minsurf/roots.hpp"

namespace minsurf::soliton {

double apply_D(const SmoothFn& psi, double z) {
  const double c = std::cosh(z);
  return -(psi.ddf(z) - 2.0 * std::tanh(z) * psi.df(z) + psi.f(z)) / (c * c);
}

double V_tilde(double y) {
  const double u = 1.0 + y * y;
  return -1.0 / (4.0 * u) - 5.0 / (4.0 * u * u);
}

double apply_D_tilde(const SmoothFn& phi, double y) {
  return -phi.ddf(y) + V_tilde(y) * phi.f(y);
}

SmoothFn conjugate_to_z(const SmoothFn& phi) {
  SmoothFn psi;
  psi.f = [phi](double z) { return std::sqrt(std::cosh(z)) * phi.f(std::sinh(z)); };
  psi.df = [phi](double z) {
    const double c = std::cosh(z), y = std::sinh(z);
    return std::sqrt(c) * (0.5 * std::tanh(z) * phi.f(y) + c * phi.df(y));
  };
  psi.ddf = [phi](double z) {
    const double c = std::cosh(z), y = std::sinh(z), t = std::tanh(z);
    const double s2 = 1.0 / (c * c);
    return std::sqrt(c) * ((0.25 * t * t + 0.5 * s2) * phi.f(y) +
                           2.0 * y * phi.df(y) + c * c * phi.ddf(y));
  };
  return psi;
}

double rayleigh_quotient_D(const SmoothFn& psi, double truncation, double tol) {
  const double num = quad([&](double z) { return psi.f(z) * apply_D(psi, z); },
                          -truncation, truncation, tol);
  const double den = quad([&](double z) { return psi.f(z) * psi.f(z); }, -truncation,
                          truncation, tol);
  if (!std::isfinite(num) || !std::isfinite(den) || den == 0.0)
    throw AccuracyError("rayleigh_quotient_D: non-integrable input");
  return num / den;
}

std::pair<double, double> zero_mode_residuals() {
  SmoothFn ep{[](double z) { return std::cosh(z) - z * std::sinh(z); },
              [](double z) { return -z * std::cosh(z); },
              [](double z) { return -std::cosh(z) - z * std::sinh(z); }};
  SmoothFn em{[](double z) { return std::sinh(z); },
              [](double z) { return std::cosh(z); },
              [](double z) { return std::sinh(z); }};
  double rp = 0.0, rm = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double z = -6.0 + 12.0 * i / 400.0;
    rp = std::max(rp, std::abs(apply_D(ep, z)));
    rm = std::max(rm, std::abs(apply_D(em, z)));
  }
  return {rp, rm};
}

EigenResult ground_state_D(double truncation, int grid_points) {
  SLProblem p;
  p.potential = V_tilde;
  p.a = -truncation;
  p.b = truncation;
  p.boundary = SLProblem::Boundary::Decay;
  auto coarse = sl_eigen(p, 0, 1e-13, grid_points / 2);
  auto fine = sl_eigen(p, 0, 1e-13, grid_points);
  fine.eigenvalue = (16.0 * fine.eigenvalue - coarse.eigenvalue) / 15.0;
  return fine;
}

double RiccatiSolution::bracket(double x) const {
  return 0.5 * C_tilde - std::sqrt((1.0 + x) / x) + std::asinh(std::sqrt(x));
}

double RiccatiSolution::Y(double x) const {
  return 2.0 * std::pow(x, 1.5) / std::sqrt(1.0 + x) * bracket(x);
}

double RiccatiSolution::W0(double x) { return (2.0 + x) / (4.0 * x * (1.0 + x)); }

double RiccatiSolution::dW0(double x) {
  const double u = 1.0 + x;
  return -(x * x + 4.0 * x + 2.0) / (4.0 * x * x * u * u);
}

double RiccatiSolution::W(double x) const {
  const double y = Y(x);
  if (std::abs(y) < 1e-12) throw PoleError("riccati W: pole in range", pole);
  return W0(x) + 1.0 / y;
}

double RiccatiSolution::dW(double x) const {
  const double y = Y(x);
  if (std::abs(y) < 1e-12) throw PoleError("riccati dW: pole in range", pole);
  // Y' = Y/(2x) + 2 W0 Y + 1
  const double dy = y / (2.0 * x) + 2.0 * W0(x) * y + 1.0;
  return dW0(x) - dy / (y * y);
}

RiccatiSolution riccati_zero_mode(double C_tilde) {
  RiccatiSolution s;
  s.C_tilde = C_tilde;
  // the bracket is strictly increasing from -inf to +inf, one zero
  double lo = 1e-12, hi = 1.0;
  while (s.bracket(hi) < 0.0) hi *= 2.0;
  while (s.bracket(lo) > 0.0) lo /= 2.0;
  s.pole = find_root([&](double x) { return s.bracket(x); }, lo, hi, 1e-14);
  return s;
}

double riccati_residual0(double w, double dw, double x) {
  const double u = 1.0 + x;
  return 4.0 * x * (dw + w * w) + 2.0 * w + 0.25 / u + 1.25 / (u * u);
}

namespace {

using cd = std::complex<double>;

cd psi_k(double k, double z) {
  const cd i(0.0, 1.0);
  return -(i * k + std::tanh(z)) * std::exp(-i * k * z);
}

cd h_psi_k_residual(double k, double z) {
  // analytic second derivative of psi_k
  const cd i(0.0, 1.0);
  const double t = std::tanh(z);
  const double s2 = 1.0 - t * t;  // sech^2
  const cd e = std::exp(-i * k * z);
  const cd ddpsi = e * (2.0 * s2 * t + 2.0 * i * k * s2 + i * k * k * k + k * k * t);
  const cd h = -ddpsi - 2.0 * s2 * psi_k(k, z);
  return h - k * k * psi_k(k, z);
}

}  // namespace

double h_eigen_check(double k, double half_width, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double z = -half_width + 2.0 * half_width * i / (samples - 1);
    worst = std::max(worst, std::abs(h_psi_k_residual(k, z)));
  }
  return worst;
}

double h_bound_state_residual(double half_width, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double z = -half_width + 2.0 * half_width * i / (samples - 1);
    const double c = std::cosh(z), t = std::tanh(z);
    const double psi = 1.0 / (std::sqrt(2.0) * c);
    const double ddpsi = psi * (t * t - 1.0 / (c * c));
    const double h = -ddpsi - 2.0 * psi / (c * c);
    worst = std::max(worst, std::abs(h + psi));
  }
  return worst;
}

std::complex<double> h_overlap(double k, double truncation) {
  const double re = quad(
      [&](double z) {
        return std::real(psi_k(k, z)) / (std::sqrt(2.0) * std::cosh(z));
      },
      -truncation, truncation, 1e-12);
  const double im = quad(
      [&](double z) {
        return std::imag(psi_k(k, z)) / (std::sqrt(2.0) * std::cosh(z));
      },
      -truncation, truncation, 1e-12);
  return {re, im};
}

double h_bound_state_norm(double truncation) {
  return quad([](double z) { return 0.5 / std::pow(std::cosh(z), 2); }, -truncation,
              truncation, 1e-13);
}

}  // namespace minsurf::soliton
