#include <hypersf/theorems.hpp>

#include <hypersf/errors.hpp>
#include <hypersf/gamma.hpp>
#include <hypersf/hypergeometric.hpp>

#include <cmath>

namespace hypersf {

namespace {

void require_positive(double sigma, double lambda) {
  if (!(sigma > 0.0) || !(lambda > 0.0)) {
    throw DomainError("sigma and lambda must be positive");
  }
}

double trig_closed(double big, double small, double s) {
  const double w = 1.0 - (small * small) / (big * big);
  const cplx f = hyp2f1(0.5, 1.0 + s, 1.0, w);
  return 2.0 * kPi * small / std::pow(big, 1.0 + 2.0 * s) * f.real();
}

}  // namespace

double theorem1_closed(double sigma, double lambda, double s) {
  require_positive(sigma, lambda);
  if (sigma < lambda) {
    throw DomainError("theorem1_closed: requires sigma >= lambda (use theorem2_closed)");
  }
  return trig_closed(sigma, lambda, s);
}

double theorem2_closed(double sigma, double lambda, double s) {
  require_positive(sigma, lambda);
  if (lambda < sigma) {
    throw DomainError("theorem2_closed: requires lambda >= sigma (use theorem1_closed)");
  }
  return trig_closed(lambda, sigma, s);
}

cplx theorem3_closed(double lambda, double s) {
  if (!(lambda >= 1.0)) throw DomainError("theorem3_closed: requires lambda >= 1");
  if (!(s < 1.0)) throw DomainError("theorem3_closed: requires Re(s) < 1");
  if (lambda == 1.0) return 0.0;

  const double l2 = lambda * lambda;
  const cplx ratio = gamma_ratio({{s - 1.0}, {s}});  // 1 / (s - 1)
  const cplx f = hyp2f1(2.0, 1.0 - s, 2.0 - s, 1.0 - 1.0 / l2);
  const double one_minus = 1.0 - l2;
  if (s == std::floor(s)) {
    // Every factor is real here; drop the round-off imaginary parts of the
    // complex-log Gamma quotient and series.
    return std::pow(lambda, 2.0 * s) * std::pow(one_minus, 1.0 - s) * ratio.real() /
           (2.0 * l2) * f.real();
  }
  const cplx power = std::pow(cplx(one_minus, 0.0), cplx(1.0 - s, 0.0));
  return std::pow(lambda, 2.0 * s) * power * ratio / (2.0 * l2) * f;
}

QuadResult trig_power_integral(double sigma, double lambda, double s, double tol) {
  require_positive(sigma, lambda);
  const double is2 = 1.0 / (sigma * sigma);
  const double il2 = 1.0 / (lambda * lambda);
  return integrate_1d(
      [&](double t) {
        const double c = std::cos(t);
        const double sn = std::sin(t);
        return std::pow(c * c * is2 + sn * sn * il2, s);
      },
      -kPi, kPi, tol);
}

ComplexQuadResult radial_power_integral(double lambda, double s, double tol) {
  if (!(lambda >= 1.0)) throw DomainError("radial_power_integral: requires lambda >= 1");
  if (!(s < 1.0)) throw DomainError("radial_power_integral: requires s < 1");
  ComplexQuadResult out;
  if (lambda == 1.0) return out;
  const double tmax = std::sqrt(lambda * lambda - 1.0);
  auto g = [&](double t) { return std::pow(1.0 + t * t, s) * std::pow(t, 1.0 - 2.0 * s); };
  // t^(1-2s) is singular at 0 for s > 1/2 and merely non-smooth for other
  // non-integer s; tanh-sinh copes with both.
  const bool smooth = (1.0 - 2.0 * s) == std::floor(1.0 - 2.0 * s) && s <= 0.5;
  const QuadResult r = smooth ? integrate_1d(g, 0.0, tmax, tol) : integrate_tanh_sinh(g, 0.0, tmax, tol);
  const cplx phase = (s == std::floor(s)) ? cplx((static_cast<long>(s) % 2 == 0) ? 1.0 : -1.0, 0.0)
                                          : std::exp(cplx(0.0, -kPi * s));
  out.value = phase * r.value;
  out.est_error = r.est_error;
  return out;
}

}  // namespace hypersf
