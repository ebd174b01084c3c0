// Shooting eigensolver for -psi'' + V(x) psi = E psi.
#ifndef MINSURF_STURM_LIOUVILLE_HPP
#define MINSURF_STURM_LIOUVILLE_HPP

#include <functional>

#include "minsurf/grid.hpp"

namespace minsurf {

struct SLProblem {
  std::function<double(double)> potential;
  double a = 0.0;
  double b = 1.0;
  // Decay problems are posed on [-R, R] with Dirichlet walls at the
  // truncation radius; R must be large enough that the potential tail is
  // negligible there.
  enum class Boundary { Dirichlet, Decay } boundary = Boundary::Dirichlet;
};

struct EigenResult {
  double eigenvalue = 0.0;
  GridFunction eigenfunction;  // peak amplitude normalized to +1
  int index = 0;               // number of interior nodes
};

// Integrates from both ends, brackets the eigenvalue by node counting and
// polishes the midpoint Wronskian mismatch.  Throws NotFound when no bracket
// exists in the scan range.
EigenResult sl_eigen(const SLProblem& problem, int index, double tol = 1e-10,
                     int grid_points = 2048);

}  // namespace minsurf

#endif
