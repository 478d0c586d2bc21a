#pragma once

#include <hypersf/quadrature.hpp>
#include <hypersf/types.hpp>

namespace hypersf {

/// int_{-pi}^{pi} (cos^2 t / sigma^2 + sin^2 t / lambda^2)^s dt for sigma >= lambda > 0:
/// (2 pi lambda / sigma^(1+2s)) 2F1(1/2, 1+s; 1; 1 - lambda^2/sigma^2).
double theorem1_closed(double sigma, double lambda, double s);

/// The same integral for lambda >= sigma > 0:
/// (2 pi sigma / lambda^(1+2s)) 2F1(1/2, 1+s; 1; 1 - sigma^2/lambda^2).
double theorem2_closed(double sigma, double lambda, double s);

/// int_1^lambda r^(2s+1) (1 - r^2)^(-s) dr for lambda >= 1, s < 1:
/// lambda^(2s) (1-lambda^2)^(1-s) Gamma(s-1) / (2 lambda^2 Gamma(s))
///   * 2F1(2, 1-s; 2-s; 1 - 1/lambda^2).
/// Principal branches throughout; for integer s the power is taken in real
/// arithmetic and the result is real.
cplx theorem3_closed(double lambda, double s);

/// Direct quadrature of the trigonometric integral shared by Theorems 1 and 2.
QuadResult trig_power_integral(double sigma, double lambda, double s, double tol = 1e-12);

/// Quadrature of the Theorem 3 integral with the principal branch of
/// (1 - r^2)^(-s) = (r^2 - 1)^(-s) e^(-i pi s), after t^2 = r^2 - 1.
struct ComplexQuadResult {
  cplx value{0.0, 0.0};
  double est_error = 0.0;
};
ComplexQuadResult radial_power_integral(double lambda, double s, double tol = 1e-12);

}  // namespace hypersf
