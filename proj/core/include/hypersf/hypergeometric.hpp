#pragma once

#include <hypersf/types.hpp>

#include <cstddef>
#include <vector>

namespace hypersf {

// Parameters of pFq(upper; lower; argument).
struct PFQParams {
  std::vector<cplx> upper;
  std::vector<cplx> lower;
  cplx argument{0.0, 0.0};
};

inline constexpr std::size_t kDefaultMaxTerms = 100000;
inline constexpr double kDefaultSeriesTol = 1e-15;

/// Direct power-series summation of pFq.
///
/// Stops once two consecutive terms are at most tol * |partial sum|; the next
/// (unsummed) term is reported as est_error. A nonpositive-integer upper
/// parameter makes the series a polynomial, which takes precedence over a
/// nonpositive-integer lower parameter further out.
///
/// Throws DivergenceError for p > q+1 (or p = q+1 with |z| > 1) unless the
/// series terminates, PoleError when a lower parameter hits a pole before any
/// truncation, ConvergenceError when max_terms is exhausted.
SeriesValue pfq_series(const PFQParams& params, double tol = kDefaultSeriesTol,
                       std::size_t max_terms = kDefaultMaxTerms);

/// Value of pfq_series; throws ConvergenceError if not converged.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, double tol = kDefaultSeriesTol);

/// Gauss summation 2F1(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
/// Requires Re(c-a-b) > 0 and c not a nonpositive integer.
cplx gauss_sum_at_unity(cplx a, cplx b, cplx c);

/// 2F1(A,B;C;z) through the two-term 1 - 1/z continuation.
///
/// Valid whenever |1 - 1/z| < 1, which covers |z| > 1 with Re(z) > 1/2 and
/// also the real interval (1/2, 1). All fractional powers use the principal
/// logarithm; for real z > 1 the factor (1-z)^(C-A-B) is taken with
/// arg(1-z) = +pi. Throws ParameterError when A+B-C is an integer and
/// ConvergenceError when |1 - 1/z| >= 1.
cplx continued_2f1(cplx a, cplx b, cplx c, cplx z, double tol = kDefaultSeriesTol);

}  // namespace hypersf
