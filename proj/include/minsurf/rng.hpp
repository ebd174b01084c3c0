// Deterministic PCG32 generator so seeded sweeps are identical across
// platforms (std::distributions are implementation-defined).
#ifndef MINSURF_RNG_HPP
#define MINSURF_RNG_HPP

#include <cmath>
#include <cstdint>

namespace minsurf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(0u), inc_((seed << 1u) | 1u) {
    next_u32();
    state_ += 0x853c49e6748fea9bULL + seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  // uniform in [0,1)
  double uniform() { return next_u32() * (1.0 / 4294967296.0); }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Box-Muller, one value per call (the pair's partner is cached)
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    while (u1 <= 1e-12) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    cached_ = r * std::sin(two_pi * u2);
    have_cached_ = true;
    return r * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace minsurf

#endif
