// Named error conditions raised by the numerical kernels.
#ifndef MINSURF_ERRORS_HPP
#define MINSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minsurf {

struct NoBracket : std::runtime_error {
  explicit NoBracket(const std::string& what) : std::runtime_error(what) {}
};

// ODE state left the finite range; carries the last time at which it was finite.
struct Blowup : std::runtime_error {
  double t_last;
  Blowup(const std::string& what, double t) : std::runtime_error(what), t_last(t) {}
};

struct AccuracyError : std::runtime_error {
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

struct NotFound : std::runtime_error {
  explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct SingularPoint : std::runtime_error {
  explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

struct OffSurface : std::runtime_error {
  double defect;
  OffSurface(const std::string& what, double d) : std::runtime_error(what), defect(d) {}
};

struct NotARealSurface : std::runtime_error {
  explicit NotARealSurface(const std::string& what) : std::runtime_error(what) {}
};

struct NoRealProfile : std::runtime_error {
  explicit NoRealProfile(const std::string& what) : std::runtime_error(what) {}
};

struct NoInstability : std::runtime_error {
  explicit NoInstability(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
  double pole;
  PoleError(const std::string& what, double where) : std::runtime_error(what), pole(where) {}
};

struct DegenerateChart : std::runtime_error {
  explicit DegenerateChart(const std::string& what) : std::runtime_error(what) {}
};

struct ChartBreakdown : std::runtime_error {
  explicit ChartBreakdown(const std::string& what) : std::runtime_error(what) {}
};

struct NotAGraph : std::runtime_error {
  explicit NotAGraph(const std::string& what) : std::runtime_error(what) {}
};

struct NullDegeneracy : std::runtime_error {
  explicit NullDegeneracy(const std::string& what) : std::runtime_error(what) {}
};

struct ConstraintLoss : std::runtime_error {
  double defect;
  ConstraintLoss(const std::string& what, double d) : std::runtime_error(what), defect(d) {}
};

}  // namespace minsurf

#endif
