#include <hypersf/hypergeometric.hpp>

#include <hypersf/errors.hpp>
#include <hypersf/gamma.hpp>

#include "compensated_sum.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace hypersf {

namespace {

using detail::CompensatedSum;

// Smallest -a over nonpositive-integer entries, if any.
std::optional<long> first_pole(const std::vector<cplx>& params) {
  std::optional<long> best;
  for (const cplx& v : params) {
    if (is_nonpositive_integer(v)) {
      const long k = static_cast<long>(-v.real());
      if (!best || k < *best) best = k;
    }
  }
  return best;
}

bool is_integer(cplx z) {
  return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

SeriesValue pfq_series(const PFQParams& params, double tol, std::size_t max_terms) {
  const std::size_t p = params.upper.size();
  const std::size_t q = params.lower.size();
  const cplx z = params.argument;

  const std::optional<long> truncation = first_pole(params.upper);
  const std::optional<long> lower_pole = first_pole(params.lower);
  if (lower_pole && (!truncation || *truncation > *lower_pole)) {
    throw PoleError("pfq_series: lower parameter " +
                    std::to_string(-*lower_pole) +
                    " is a pole not preceded by a truncating upper parameter");
  }

  SeriesValue out;
  if (z == cplx(0.0, 0.0)) {
    out.value = 1.0;
    out.terms_used = 1;
    out.converged = true;
    return out;
  }
  if (!truncation) {
    if (p > q + 1) {
      throw DivergenceError("pfq_series: p > q+1 series diverges for z != 0");
    }
    if (p == q + 1 && std::abs(z) > 1.0) {
      throw DivergenceError("pfq_series: p = q+1 series diverges for |z| > 1");
    }
  }

  CompensatedSum sum;
  cplx term = 1.0;
  sum.add(term);
  std::size_t small_in_row = 0;
  for (std::size_t k = 0;; ++k) {
    const double kd = static_cast<double>(k);
    if (truncation && static_cast<long>(k) + 1 > *truncation) {
      out.value = sum.value();
      out.terms_used = k + 1;
      out.est_error = 0.0;
      out.converged = true;
      return out;
    }
    cplx ratio = z / (kd + 1.0);
    for (const cplx& a : params.upper) ratio *= a + kd;
    for (const cplx& b : params.lower) ratio /= b + kd;
    const cplx next = term * ratio;

    if (small_in_row >= 2) {
      out.value = sum.value();
      out.terms_used = k + 1;
      out.est_error = std::abs(next);
      out.converged = true;
      return out;
    }
    if (k + 1 >= max_terms) {
      throw ConvergenceError("pfq_series: no convergence after " +
                             std::to_string(max_terms) + " terms");
    }
    term = next;
    sum.add(term);
    const double mag = std::abs(sum.value());
    if (std::abs(term) <= tol * mag || term == cplx(0.0, 0.0)) {
      ++small_in_row;
    } else {
      small_in_row = 0;
    }
    if (!std::isfinite(std::abs(term))) {
      throw ConvergenceError("pfq_series: term overflow");
    }
  }
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, double tol) {
  const SeriesValue v = pfq_series(PFQParams{{a, b}, {c}, z}, tol);
  return v.value;
}

cplx gauss_sum_at_unity(cplx a, cplx b, cplx c) {
  if (!((c - a - b).real() > 0.0)) {
    throw DomainError("gauss_sum_at_unity: requires Re(c-a-b) > 0");
  }
  if (is_nonpositive_integer(c)) {
    throw ParameterError("gauss_sum_at_unity: c is a nonpositive integer");
  }
  return gamma_ratio({{c, c - a - b}, {c - a, c - b}});
}

cplx continued_2f1(cplx a, cplx b, cplx c, cplx z, double tol) {
  if (is_integer(a + b - c)) {
    throw ParameterError("continued_2f1: A+B-C is an integer");
  }
  if (z == cplx(0.0, 0.0)) {
    throw DomainError("continued_2f1: z = 0");
  }
  const cplx w = 1.0 - 1.0 / z;
  if (!(std::abs(w) < 1.0)) {
    throw ConvergenceError("continued_2f1: |1 - 1/z| >= 1, outside the continuation domain");
  }

  cplx total = 0.0;
  const cplx g1 = gamma_ratio({{c, c - a - b}, {c - a, c - b}});
  if (g1 != cplx(0.0, 0.0)) {
    const cplx f1 = pfq_series({{a, 1.0 + a - c}, {a + b - c + 1.0}, w}, tol).value;
    total += g1 * std::pow(z, -a) * f1;
  }
  const cplx g2 = gamma_ratio({{c, a + b - c}, {a, b}});
  if (g2 != cplx(0.0, 0.0)) {
    const cplx one_minus_z = cplx(1.0, 0.0) - z;
    const cplx f2 = pfq_series({{c - a, 1.0 - a}, {1.0 + c - a - b}, w}, tol).value;
    total += g2 * std::pow(z, a - c) * std::pow(one_minus_z, c - a - b) * f2;
  }
  return total;
}

}  // namespace hypersf
