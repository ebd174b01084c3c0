// Spectral analysis of the Lorentzian catenoid perturbation operator
//   D = -(1/cosh^2 z)(d^2/dz^2 - 2 tanh z d/dz + 1)
// and its flat y-coordinate form D~ = -d^2/dy^2 + V~(y), y = sinh z.
#ifndef MINSURF_SOLITON_SPECTRUM_HPP
#define MINSURF_SOLITON_SPECTRUM_HPP

#include <complex>
#include <utility>

#include "minsurf/smooth_fn.hpp"
#include "minsurf/sturm_liouville.hpp"

namespace minsurf::soliton {

double apply_D(const SmoothFn& psi, double z);

double V_tilde(double y);
double apply_D_tilde(const SmoothFn& phi, double y);

// Unitary image of phi(y) in the z picture: psi(z) = sqrt(cosh z) phi(sinh z).
SmoothFn conjugate_to_z(const SmoothFn& phi);

// Flat L^2(dz) Rayleigh quotient <psi, D psi>/<psi, psi>; the pairing is
// pinned by psi = sech z giving exactly -8/15.
double rayleigh_quotient_D(const SmoothFn& psi, double truncation = 40.0,
                           double tol = 1e-12);

// sup_z |D eps_+| and |D eps_-| for eps_+ = cosh z - z sinh z, eps_- = sinh z.
std::pair<double, double> zero_mode_residuals();

// Lowest even eigenvalue of D~ with decay boundary conditions, Richardson
// refined over two grids; strictly below -8/15.
EigenResult ground_state_D(double truncation = 50.0, int grid_points = 16384);

// kappa = 0 Riccati zero mode W(x) = W0(x) + 1/Y(x).  W blows up at the one
// zero of the integrating bracket; evaluation near it throws PoleError.
struct RiccatiSolution {
  double C_tilde = 0.0;
  double pole = 0.0;
  double W(double x) const;
  double dW(double x) const;
  static double W0(double x);
  static double dW0(double x);

 private:
  friend RiccatiSolution riccati_zero_mode(double C_tilde);
  double bracket(double x) const;   // C~/2 - sqrt((1+x)/x) + asinh(sqrt x)
  double Y(double x) const;
};
RiccatiSolution riccati_zero_mode(double C_tilde);

// Residual of 4x(W' + W^2) + 2W + B/(1+x) + D/(1+x)^2, B = 1/4, D = 5/4.
double riccati_residual0(double w, double dw, double x);

// sup-norm residual of (H - k^2) psi_k on a grid, H = -d^2 - 2 sech^2,
// psi_k = -(ik + tanh z) exp(-ikz).
double h_eigen_check(double k, double half_width = 20.0, int samples = 4001);

// sup |H psi0 + psi0| for the bound state psi0 = sech/sqrt(2).
double h_bound_state_residual(double half_width = 20.0, int samples = 4001);

// integral of psi0 * psi_k over the line (flat, no conjugation)
std::complex<double> h_overlap(double k, double truncation = 40.0);

double h_bound_state_norm(double truncation = 40.0);

}  // namespace minsurf::soliton

#endif
