#pragma once

#include <hypersf/types.hpp>

#include <vector>

namespace hypersf {

/// Principal log Gamma for complex arguments.
///
/// Lanczos approximation (g = 607/128, 15 coefficients) for Re(z) >= 1/2,
/// reflection formula otherwise. The imaginary part is only defined modulo
/// 2*pi; exp(log_gamma(z)) is accurate to a few ulp times |log Gamma|.
/// Throws PoleError at nonpositive integers.
cplx log_gamma(cplx z);

/// Gamma(z) = exp(log_gamma(z)).
cplx gamma(cplx z);

/// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z);

/// True when z is exactly 0, -1, -2, ... (no tolerance).
bool is_nonpositive_integer(cplx z);

/// Rising factorial (a)_n = Gamma(a+n)/Gamma(a) for any integer n.
///
/// Negative n uses (a)_{-k} = 1 / ((a-1)(a-2)...(a-k)). When a is a
/// nonpositive integer and a+n is not, the ratio is zero (finite over a pole).
/// When a+n is a nonpositive integer and a is not, the ratio diverges and
/// PoleError is thrown.
cplx pochhammer(cplx a, long n);
double pochhammer(double a, long n);

/// log (a)_n with an explicit flag for an exact zero.
struct PochhammerLog {
  cplx log{0.0, 0.0};
  bool zero = false;

  cplx value() const;
};
PochhammerLog log_pochhammer(cplx a, long n);

/// Quotient of Gamma products, prod Gamma(num) / prod Gamma(den).
struct GammaRatioSpec {
  std::vector<cplx> numerator_args;
  std::vector<cplx> denominator_args;
};

/// Evaluates the ratio as the limit eps -> 0 of
/// prod Gamma(num + eps) / prod Gamma(den + eps).
///
/// Poles at x = -k are replaced by their residue coefficient (-1)^k / k!;
/// the matching powers of eps cancel when the pole counts agree. More
/// numerator poles than denominator poles throws DivergenceError, fewer
/// yields exactly zero.
cplx gamma_ratio(const GammaRatioSpec& spec);

/// int_0^{pi/2} sin^alpha(t) cos^beta(t) dt, alpha, beta > -1.
double wallis_integral(double alpha, double beta);

}  // namespace hypersf
