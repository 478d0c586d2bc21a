#pragma once

#include <hypersf/types.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace hypersf::test {

inline double rel(double x, double ref) {
  return ref == 0.0 ? std::abs(x) : std::abs(x - ref) / std::abs(ref);
}

inline double rel(cplx x, cplx ref) {
  return ref == cplx(0.0, 0.0) ? std::abs(x) : std::abs(x - ref) / std::abs(ref);
}

// Fixed-seed draws for the property tests.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  // (lo, hi]
  double uniform_left_open(double lo, double hi) {
    double v = uniform(lo, hi);
    while (v == lo) v = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hypersf::test
