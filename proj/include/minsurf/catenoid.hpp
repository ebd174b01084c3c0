// Two-ring soap film: branch solving, stability spectra, perturbation theory.
#ifndef MINSURF_CATENOID_HPP
#define MINSURF_CATENOID_HPP

#include <vector>

#include "minsurf/grid.hpp"
#include "minsurf/sturm_liouville.hpp"

namespace minsurf::catenoid {

// rho = 2r/d, the single dimensionless parameter of the two-ring problem.
struct RingProblem {
  double rho;
};

enum class BranchKind { Outer, Inner, Critical };

struct CatenoidBranch {
  double w;           // d/(2a)
  double a_over_d;    // 1/(2w)
  double area_coeff;  // A(w) in units of pi d^2/2
  BranchKind branch;
};

struct StabilityReport {
  double lowest_eigenvalue;
  GridFunction eigenfunction;
  bool stable;    // eigenvalue > tol
  bool marginal;  // |eigenvalue| <= tol (critical branch)
};

// w0 tanh w0 = 1 and the tangency ratio rho_bar = cosh(w0)/w0.
struct CriticalRatio {
  double w0;
  double rho_bar;
};
CriticalRatio critical_ratio();

double area_coefficient(double w);  // 1/w + sinh(2w)/(2w^2)

// Empty below the critical ratio, one Critical branch within 1e-10 of it,
// otherwise Outer (w < w0) then Inner (w > w0).
std::vector<CatenoidBranch> solve_branches(const RingProblem& p);

struct AreaComparison {
  double area_difference;    // A2 - A1 in units of pi d^2/2
  double analytic_witness;   // sinh(w2-w1) - (w2-w1), same sign
};
AreaComparison compare_areas(const CatenoidBranch& b1, const CatenoidBranch& b2);

StabilityReport stability(const CatenoidBranch& b, int grid_points = 2048);

struct InstabilityMode {
  double k;           // smallest positive root of psi_k(w2) = 0
  GridFunction mode;  // psi_k on [-w2, w2], psi_k(0) = 1
};
// Throws NoInstability for w2 <= w0.
InstabilityMode instability_mode(double w2, int grid_points = 2048);

struct PerturbedEigenvalue {
  double exact_formula;  // -6 (w tanh w - 1) / (w^2 (3 - w tanh w)), w = w0+eps
  double rayleigh;       // -3 eps / w0
};
PerturbedEigenvalue perturbative_eigenvalue(double eps);

struct IntegralIdentity {
  double normalized;  // (J0 - 3 J1 + 3 J2 - J3) * 4 / w0^3, should be 1
  double j[4];
  double k[3];                  // K0..K2 by quadrature
  double recursion_residual[3]; // J_n recursion defect for n = 1,2,3
};
IntegralIdentity jn_kn_identity();

// Area change (units pi d^2/2) of the gamma-deformed critical profile.
double flat_direction_area(double gamma);

}  // namespace minsurf::catenoid

#endif
