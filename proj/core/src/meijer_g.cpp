#include <hypersf/meijer_g.hpp>

#include <hypersf/errors.hpp>
#include <hypersf/gamma.hpp>

#include <cmath>
#include <cstdio>

namespace hypersf {

namespace {

bool is_integer(cplx z) {
  return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

void GSpec::validate() const {
  const int pp = p();
  const int qq = q();
  if (pp > qq) throw ParameterError("GSpec: requires p <= q");
  if (m < 1 || m > qq) throw ParameterError("GSpec: requires 1 <= m <= q");
  if (n < 0 || n > pp) throw ParameterError("GSpec: requires 0 <= n <= p");
}

cplx g2222_to_2f1(cplx a1, cplx a2, cplx b1, cplx b2, cplx z, double tol) {
  const cplx w = cplx(1.0, 0.0) - z;
  if (!(std::abs(w) < 1.0)) {
    throw DomainError("g2222_to_2f1: requires |1 - z| < 1");
  }
  const cplx c = 2.0 - a1 - a2 + b1 + b2;
  if (is_nonpositive_integer(c)) {
    throw ParameterError("g2222_to_2f1: 2 - a1 - a2 + b1 + b2 is a nonpositive integer");
  }
  const cplx pre = gamma_ratio(
      {{1.0 - a1 + b1, 1.0 - a1 + b2, 1.0 - a2 + b1, 1.0 - a2 + b2}, {c}});
  if (pre == cplx(0.0, 0.0)) return 0.0;
  return pre * std::pow(z, b1) * hyp2f1(1.0 - a1 + b1, 1.0 - a2 + b1, c, w, tol);
}

GDecomposition g_decompose(const GSpec& spec, double tol) {
  spec.validate();
  const int p = spec.p();
  const int q = spec.q();
  const int m = spec.m;
  const int n = spec.n;
  const cplx z = spec.argument;

  if (p < 1) throw ParameterError("g_decompose: requires p >= 1");
  for (int h = 0; h < n; ++h) {
    for (int j = h + 1; j < n; ++j) {
      if (is_integer(spec.a[h] - spec.a[j])) {
        throw ParameterError("g_decompose: a_" + std::to_string(h + 1) + " and a_" +
                             std::to_string(j + 1) + " differ by an integer");
      }
    }
  }
  if (z == cplx(0.0, 0.0)) throw DomainError("g_decompose: z = 0");

  const bool on_minus_unit = z.imag() == 0.0 && z.real() > -1.0 && z.real() < 0.0;
  bool applicable = false;
  if (p > q) {
    applicable = true;
  } else if (p == q) {
    applicable = (m + n == p + 1 && !on_minus_unit) || (m + n > p + 1) ||
                 (m + n == p && std::abs(z) > 1.0);
  }
  if (!applicable) {
    throw ConvergenceError("g_decompose: none of the applicability conditions hold");
  }

  GDecomposition out;
  const double inv = 1.0 / std::abs(z);
  if (inv > 0.9) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "precision: |1/z| = %.6g is close to 1", inv);
    out.warnings.emplace_back(buf);
  }
  const cplx w = ((q - m - n) % 2 == 0 ? 1.0 : -1.0) / z;

  for (int h = 0; h < n; ++h) {
    const cplx ah = spec.a[h];
    GammaRatioSpec g;
    for (int j = 0; j < n; ++j) {
      if (j != h) g.numerator_args.push_back(ah - spec.a[j]);
    }
    for (int j = 0; j < m; ++j) g.numerator_args.push_back(1.0 + spec.b[j] - ah);
    for (int j = n; j < p; ++j) g.denominator_args.push_back(1.0 + spec.a[j] - ah);
    for (int j = m; j < q; ++j) g.denominator_args.push_back(ah - spec.b[j]);

    GDecompositionTerm t;
    t.h = h + 1;
    t.gamma_factor = gamma_ratio(g);
    t.coefficient = t.gamma_factor == cplx(0.0, 0.0) ? cplx(0.0, 0.0)
                                                     : t.gamma_factor * std::pow(z, ah - 1.0);
    for (int j = 0; j < q; ++j) t.series.upper.push_back(1.0 + spec.b[j] - ah);
    for (int j = 0; j < p; ++j) {
      if (j != h) t.series.lower.push_back(1.0 + spec.a[j] - ah);
    }
    t.series.argument = w;
    if (t.coefficient != cplx(0.0, 0.0)) {
      t.series_value = pfq_series(t.series, tol);
      t.value = t.coefficient * t.series_value.value;
    }
    out.value += t.value;
    out.terms.push_back(std::move(t));
  }
  return out;
}

GSpec area_kernel_spec(int m, int n, double z) {
  if (m < 0 || n < 0) throw ParameterError("area kernel: m and n must be nonnegative");
  GSpec s;
  s.a = {1.5, static_cast<double>(-m), 2.0 + n};
  s.b = {0.0, 1.0 + n, 0.0};
  s.m = 2;
  s.n = 2;
  s.argument = z;
  return s;
}

double g2233_area_kernel(int m, int n, double z, double tol) {
  if (!(z > 1.0)) throw DomainError("g2233_area_kernel: requires z > 1");
  return g_decompose(area_kernel_spec(m, n, z), tol).value.real();
}

}  // namespace hypersf
