#pragma once

#include <hypersf/params.hpp>

#include <cstddef>
#include <functional>

namespace hypersf {

struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;
  std::size_t evaluations = 0;
};

using RealFn = std::function<double(double)>;

inline constexpr std::size_t kMaxPanels = 4000;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature. The panel with the
/// largest |K15 - G7| is bisected until the summed estimate is at most
/// max(tol * |value|, tol_abs). Ties are broken by the left endpoint, so the
/// result is reproducible. Throws ConvergenceError after kMaxPanels panels.
QuadResult integrate_1d(const RealFn& f, double lo, double hi, double tol,
                        double tol_abs = 0.0);

/// Double-exponential (tanh-sinh) quadrature for integrands with integrable
/// endpoint singularities. f is never evaluated at the endpoints. Levels are
/// halved until two successive estimates agree to tol. Throws
/// ConvergenceError when they do not after 12 levels.
QuadResult integrate_tanh_sinh(const RealFn& f, double lo, double hi, double tol);

/// Lateral cap area from the polar double integral with t^2 = r^2 - 1, which
/// makes the inner integrand sqrt(t^2 (1 + k c^2) + k c^2) smooth on
/// [0, H/c]. The theta range is folded to 4 x [0, pi/2].
QuadResult surface_integral_oracle(const GeometryParams& p, double tol = 1e-10);

/// Same integrand restricted to theta in [theta0, theta1] (no folding).
QuadResult surface_integral_sector(const GeometryParams& p, double theta0, double theta1,
                                   double tol = 1e-10);

/// Second route: u = r^2, keeping the (u - 1)^(-1/2) endpoint singularity
/// and integrating it with tanh-sinh.
QuadResult surface_integral_oracle_u(const GeometryParams& p, double tol = 1e-10);

/// 2 pi int_0^H x sqrt(1 + x'^2) dz with x = a sqrt(1 + z^2/c^2). Requires a == b.
QuadResult revolve_oracle(const GeometryParams& p, double tol = 1e-12);

/// pi a b int_0^H (1 + z^2/c^2) dz
QuadResult volume_slice_oracle(const GeometryParams& p, double tol = 1e-13);

}  // namespace hypersf
