#pragma once

#include <hypersf/params.hpp>
#include <hypersf/srivastava_daoust.hpp>
#include <hypersf/types.hpp>

#include <string>

namespace hypersf {

double lambda_of(const GeometryParams& p);

/// Arguments of the area series and whether each lies in (-1, 1):
/// x1 = b^2/a^2 - 1, x2 = 1 - 1/lambda^2, x3 = a^2 (1 - lambda^2) / (c^2 lambda^2).
/// The (-1/2)_{p-m} denominator couples m and p binomially, so the terms along
/// m/p = |x1|/(1+|x1|) decay like (|x3| (1+|x1|))^p; ok13 asks that this be < 1.
struct RegionCheck {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
  bool ok1 = true, ok2 = true, ok3 = true, ok13 = true;

  bool all() const { return ok1 && ok2 && ok3 && ok13; }
  std::string failed() const;  // e.g. "|x3| >= 1"; empty when all() holds
};

RegionCheck area_region_check(const GeometryParams& p);

enum class AreaMethod { closed_form, triple_sum, oracle };
const char* to_string(AreaMethod m);

struct AreaResult {
  double area = 0.0;
  AreaMethod method = AreaMethod::closed_form;
  bool region_ok = true;
  SeriesValue series;  // the series alone, before the prefactor
  std::string note;    // names the failed condition after a fallback
};

/// The three-variable tableau of the area series.
SDSpec area_tableau();

/// 2 pi b^2 c sqrt(lambda^2 - 1) / (lambda a)
double area_prefactor(const GeometryParams& p);

/// Lateral area of the cap through the Srivastava-Daoust series. Outside the
/// region, throws RegionError when strict, otherwise returns the quadrature
/// oracle value with method = oracle and region_ok = false.
AreaResult surface_area_closed(const GeometryParams& p, double tol = 1e-10, bool strict = false);

/// Same value from the explicit triple sum over (m, n, p), coded with its own
/// term-ratio recurrences.
AreaResult surface_area_triple_sum(const GeometryParams& p, double tol = 1e-10,
                                   bool strict = false);

/// pi a b H (1 + H^2 / (3 c^2))
double volume(const GeometryParams& p);

struct VolumeParts {
  double V_c = 0.0;  // elliptic cylinder over the top ellipse
  double V_b = 0.0;  // the part of that cylinder outside the hyperboloid
  double V = 0.0;
};
VolumeParts volume_decomposition(const GeometryParams& p);

/// Ratio of a top-ellipse semi-axis to the matching waist semi-axis.
double lambda_from_bases(double large_semi_axis, double small_semi_axis);

/// c = H / sqrt(lambda^2 - 1); undefined (DomainError) when lambda == 1.
double axial_scale_from_bases(double H, double large_semi_axis, double small_semi_axis);

}  // namespace hypersf
