#pragma once

#include <hypersf/hypergeometric.hpp>
#include <hypersf/types.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hypersf {

/// Vertical line Re(s) = abscissa, truncated to |Im(s)| <= half_height and
/// sampled with `nodes` trapezoid panels.
struct ContourSpec {
  double abscissa = 0.0;
  double half_height = 30.0;
  std::size_t nodes = 512;
};

inline constexpr std::size_t kMinContourNodes = 64;
inline constexpr int kMaxNodeDoublings = 3;

/// Gamma-quotient integrand
///
///   prod Gamma(b_j - s) prod Gamma(c_j + s)
///   --------------------------------------- * base^s
///   prod Gamma(d_j - s) prod Gamma(e_j + s)
///
/// `minus_num` generates the right pole families {b_j + k}, `plus_num` the
/// left families {-c_j - k}.
struct GammaQuotient {
  std::vector<cplx> minus_num;
  std::vector<cplx> plus_num;
  std::vector<cplx> minus_den;
  std::vector<cplx> plus_den;
  cplx base{1.0, 0.0};

  cplx log_value(cplx s) const;  // throws PoleError on a numerator pole
  cplx value(cplx s) const;      // zero when a denominator Gamma has a pole

  std::vector<cplx> left_pole_origins() const;   // -c_j
  std::vector<cplx> right_pole_origins() const;  // b_j

  /// Exponential decay rate of |integrand| along the line, pi * Lambda - |arg base|.
  double decay_rate() const;
};

/// Separating line between the left families {l - k} and right families
/// {r + k}: abscissa at the midpoint of (max Re l, min Re r). half_height is
/// sized so that exp(-decay_rate * T) < tol / 10. Throws ParameterError when
/// the families interleave on the real axis.
ContourSpec choose_contour(std::span<const cplx> left_poles,
                           std::span<const cplx> right_poles,
                           double decay_rate = kPi / 2.0, double tol = 1e-12);

/// Straight line for integrands whose pole families interleave.
///
/// Picks the midpoint of the widest gap between pole real parts that crosses
/// the fewest poles. The wrong-side poles are picked up as residues by
/// mb_line_integral.
ContourSpec choose_crossing_contour(const GammaQuotient& integrand, double tol = 1e-12);

/// (1 / 2 pi i) * integral of the integrand over the Barnes contour that keeps
/// left families on the left and right families on the right.
///
/// The straight line given by `contour` is integrated with the trapezoid rule
/// in Im(s), evaluated in log space, summed from t = 0 outward in symmetric
/// pairs. Poles on the wrong side of the line are added as residues (simple
/// poles only). Nodes double (at most three times) until two successive
/// results agree to tol; est_error is that difference plus the tail bound.
SeriesValue mb_line_integral(const GammaQuotient& integrand, const ContourSpec& contour,
                             double tol);

/// (1-z)^(-a) from its Barnes integral over Gamma(a+s) Gamma(-s) (-z)^s.
/// Requires |arg(-z)| < pi (z not on [0, inf)) and a not a nonpositive integer.
SeriesValue mb_1f0(cplx a, cplx z, const ContourSpec& contour, double tol = 1e-10);
SeriesValue mb_1f0(cplx a, cplx z, double tol = 1e-10);

/// pFq through its Barnes integral. Requires p = q+1 with |arg(-z)| < pi or
/// p = q with |arg(-z)| < pi/2.
SeriesValue mb_pfq(const PFQParams& params, const ContourSpec& contour, double tol = 1e-10);
SeriesValue mb_pfq(const PFQParams& params, double tol = 1e-10);

/// Which of the five classical convergence conditions hold for G^{m,n}_{p,q}(z).
struct GConvergenceReport {
  double Lambda = 0.0;  // m + n - (p+q)/2
  cplx nu{0.0, 0.0};    // sum b - sum a
  bool condition_i = false;
  bool condition_ii = false;
  bool condition_iii = false;  // never asserted: its abscissa clause is incomplete
  bool condition_iv = false;
  bool condition_v = false;
  bool iii_candidate = false;  // |arg z| = Lambda pi and p != q
  std::string summary;

  bool any() const {
    return condition_i || condition_ii || condition_iii || condition_iv || condition_v;
  }
};

GConvergenceReport check_g_convergence(std::span<const cplx> a, std::span<const cplx> b,
                                       int m, int n, cplx z);

/// G^{m,n}_{p,q}(z) from its defining Barnes integral along a vertical line.
///
/// Throws ConvergenceError when none of the conditions (i)-(v) hold and
/// UnsupportedError when only the loop-contour conditions (ii)-(v) hold, since
/// a vertical line needs Lambda > 0 and |arg z| < Lambda pi.
SeriesValue mb_meijer_g(std::span<const cplx> a, std::span<const cplx> b, int m, int n,
                        cplx z, const ContourSpec& contour, double tol = 1e-10);
SeriesValue mb_meijer_g(std::span<const cplx> a, std::span<const cplx> b, int m, int n,
                        cplx z, double tol = 1e-10);

/// Integrand of G^{m,n}_{p,q}(z); exposed for contour selection.
GammaQuotient meijer_g_integrand(std::span<const cplx> a, std::span<const cplx> b, int m,
                                 int n, cplx z);

}  // namespace hypersf
