// A scalar function bundled with its first two analytic derivatives.
#ifndef MINSURF_SMOOTH_FN_HPP
#define MINSURF_SMOOTH_FN_HPP

#include <functional>

namespace minsurf {

struct SmoothFn {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> ddf;
};

}  // namespace minsurf

#endif
