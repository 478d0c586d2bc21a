#include <hypersf/geometry.hpp>

#include <hypersf/errors.hpp>
#include <hypersf/quadrature.hpp>

#include "compensated_sum.hpp"

#include <algorithm>
#include <cmath>

namespace hypersf {

void GeometryParams::validate() const {
  if (!(b > 0.0)) throw ParameterError("geometry: requires b > 0");
  if (a == b) {
    if (!allow_circular) throw ParameterError("geometry: a == b needs the circular extension");
  } else if (!(a > b)) {
    throw ParameterError("geometry: requires a > b");
  }
  if (!(c > 0.0)) throw ParameterError("geometry: requires c > 0");
  if (!(H >= 0.0) || !std::isfinite(H)) throw ParameterError("geometry: requires H >= 0");
}

double GeometryParams::lambda() const { return std::sqrt(1.0 + (H / c) * (H / c)); }

double lambda_of(const GeometryParams& p) {
  p.validate();
  return p.lambda();
}

std::string RegionCheck::failed() const {
  std::string out;
  auto add = [&](bool ok, const char* what) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += what;
  };
  add(ok1, "|x1| >= 1");
  add(ok2, "|x2| >= 1");
  add(ok3, "|x3| >= 1");
  add(ok13, "|x3| (1 + |x1|) >= 1");
  return out;
}

RegionCheck area_region_check(const GeometryParams& p) {
  p.validate();
  RegionCheck r;
  const double l2 = p.lambda() * p.lambda();
  const double hc2 = (p.H / p.c) * (p.H / p.c);  // lambda^2 - 1
  r.x1 = (p.b * p.b) / (p.a * p.a) - 1.0;
  r.x2 = hc2 / l2;
  r.x3 = -(p.a * p.a) * hc2 / (p.c * p.c * l2);
  r.ok1 = std::abs(r.x1) < 1.0;
  r.ok2 = std::abs(r.x2) < 1.0;
  r.ok3 = std::abs(r.x3) < 1.0;
  r.ok13 = std::abs(r.x3) * (1.0 + std::abs(r.x1)) < 1.0;
  return r;
}

const char* to_string(AreaMethod m) {
  switch (m) {
    case AreaMethod::closed_form: return "closed_form";
    case AreaMethod::triple_sum: return "triple_sum";
    case AreaMethod::oracle: return "oracle";
  }
  return "oracle";
}

SDSpec area_tableau() {
  SDSpec s;
  s.variable_count = 3;
  s.upper_global = {{0.5, {0, 1, 1}}};
  s.lower_global = {{-0.5, {-1, 0, 1}}, {1.5, {0, 1, 1}}};
  s.upper_per_variable = {{{0.5, 1}}, {{2.0, 1}}, {{-0.5, 1}, {-0.5, 1}}};
  s.lower_per_variable = {{{1.0, 1}}, {}, {}};
  return s;
}

double area_prefactor(const GeometryParams& p) {
  const double lam = p.lambda();
  return 2.0 * kPi * p.b * p.b * p.c * (p.H / p.c) / (lam * p.a);
}

namespace {

double series_tol(double tol) { return std::clamp(tol * 1e-3, 1e-16, 1e-12); }

bool fallback(const GeometryParams& p, const RegionCheck& r, double tol, bool strict,
              AreaResult& out) {
  if (r.all()) return false;
  if (strict) {
    throw RegionError("surface area series outside its region: " + r.failed());
  }
  const QuadResult q = surface_integral_oracle(p, tol);
  out.area = q.value;
  out.method = AreaMethod::oracle;
  out.region_ok = false;
  out.series = SeriesValue{q.value, q.evaluations, q.est_error, true};
  out.note = "fell back to quadrature: " + r.failed();
  return true;
}

}  // namespace

AreaResult surface_area_closed(const GeometryParams& p, double tol, bool strict) {
  const RegionCheck r = area_region_check(p);
  AreaResult out;
  out.method = AreaMethod::closed_form;
  if (p.H == 0.0) {
    out.series = SeriesValue{1.0, 1, 0.0, true};
    return out;
  }
  if (fallback(p, r, tol, strict, out)) return out;
  out.series = sd_eval(area_tableau(), {r.x1, r.x2, r.x3}, series_tol(tol));
  out.area = area_prefactor(p) * out.series.value.real();
  return out;
}

AreaResult surface_area_triple_sum(const GeometryParams& p, double tol, bool strict) {
  const RegionCheck r = area_region_check(p);
  AreaResult out;
  out.method = AreaMethod::triple_sum;
  if (p.H == 0.0) {
    out.series = SeriesValue{1.0, 1, 0.0, true};
    return out;
  }
  if (fallback(p, r, tol, strict, out)) return out;

  constexpr long kMaxIndex = 2000;
  const double eps = series_tol(tol);
  const double x1 = r.x1, x2 = r.x2, x3 = r.x3;

  detail::CompensatedSum total;
  std::size_t terms = 0;
  double last_block = 0.0;

  // term(0, 0, p) for the outer loop
  double t_p = 1.0;
  int quiet_p = 0;
  for (long pp = 0; pp < kMaxIndex; ++pp) {
    double block_p = 0.0;
    double t_n = t_p;  // term(0, n, p)
    int quiet_n = 0;
    for (long n = 0; n < kMaxIndex; ++n) {
      double block_n = 0.0;
      double t_m = t_n;  // term(m, n, p)
      detail::CompensatedSum inner;
      int quiet_m = 0;
      for (long m = 0; m < kMaxIndex; ++m) {
        inner.add(t_m);
        block_n += std::abs(t_m);
        ++terms;
        if (std::abs(t_m) <= eps * std::abs(inner.value().real()) || t_m == 0.0) {
          if (++quiet_m >= 2 && m >= 2) break;
        } else {
          quiet_m = 0;
        }
        const double md = static_cast<double>(m);
        t_m *= (0.5 + md) * (static_cast<double>(pp) - md - 1.5) * x1 / ((1.0 + md) * (1.0 + md));
      }
      total.add(inner.value());
      block_p += block_n;
      if (block_n <= eps * std::abs(total.value().real()) || block_n == 0.0) {
        if (++quiet_n >= 2) break;
      } else {
        quiet_n = 0;
      }
      const double nd = static_cast<double>(n);
      const double npd = nd + static_cast<double>(pp);
      t_n *= (0.5 + npd) * (2.0 + nd) * x2 / ((1.5 + npd) * (1.0 + nd));
    }
    last_block = block_p;
    if (block_p <= eps * std::abs(total.value().real()) || block_p == 0.0) {
      if (++quiet_p >= 2) {
        out.series = SeriesValue{total.value(), terms, last_block, true};
        out.area = area_prefactor(p) * out.series.value.real();
        return out;
      }
    } else {
      quiet_p = 0;
    }
    const double pd = static_cast<double>(pp);
    t_p *= (0.5 + pd) * (pd - 0.5) * x3 / ((1.5 + pd) * (1.0 + pd));
  }
  throw ConvergenceError("surface_area_triple_sum: no convergence");
}

double volume(const GeometryParams& p) {
  GeometryParams q = p;
  q.allow_circular = true;
  q.validate();
  return kPi * p.a * p.b * p.H * (1.0 + p.H * p.H / (3.0 * p.c * p.c));
}

VolumeParts volume_decomposition(const GeometryParams& p) {
  GeometryParams q = p;
  q.allow_circular = true;
  q.validate();
  const double hc2 = (p.H / p.c) * (p.H / p.c);  // lambda^2 - 1
  VolumeParts v;
  v.V_c = kPi * p.a * p.b * (1.0 + hc2) * p.H;
  v.V_b = 2.0 * kPi * p.a * p.b * p.c * hc2 * std::sqrt(hc2) / 3.0;
  v.V = v.V_c - v.V_b;
  return v;
}

double lambda_from_bases(double large_semi_axis, double small_semi_axis) {
  if (!(small_semi_axis > 0.0)) throw DomainError("lambda_from_bases: requires small > 0");
  const double r = large_semi_axis / small_semi_axis;
  if (!(r >= 1.0)) throw DomainError("lambda_from_bases: ratio below 1, not a hyperboloid cap");
  return r;
}

double axial_scale_from_bases(double H, double large_semi_axis, double small_semi_axis) {
  const double lam = lambda_from_bases(large_semi_axis, small_semi_axis);
  if (lam == 1.0) throw DomainError("axial_scale_from_bases: lambda = 1, c is undefined");
  return H / std::sqrt(lam * lam - 1.0);
}

}  // namespace hypersf
