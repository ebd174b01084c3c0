// Adaptive Simpson quadrature.
#ifndef MINSURF_QUADRATURE_HPP
#define MINSURF_QUADRATURE_HPP

#include <functional>

namespace minsurf {

double quad(const std::function<double(double)>& f, double a, double b,
            double tol = 1e-12);

}  // namespace minsurf

#endif
