#pragma once

#include <complex>
#include <cstddef>

namespace hypersf {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Result of a truncated series or a numerically evaluated integral.
//
// est_error is an absolute estimate. When converged is set, est_error is at
// most the requested relative tolerance times |value|.
struct SeriesValue {
  cplx value{0.0, 0.0};
  std::size_t terms_used = 0;
  double est_error = 0.0;
  bool converged = false;
};

}  // namespace hypersf
