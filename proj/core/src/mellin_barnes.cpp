#include <hypersf/mellin_barnes.hpp>

#include <hypersf/errors.hpp>
#include <hypersf/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hypersf {

namespace {

constexpr double kPoleSnap = 1e-12;
constexpr double kMaxHalfHeight = 1000.0;

// Within kPoleSnap of 0, -1, -2, ...
bool near_nonpositive_integer(cplx x) {
  if (std::abs(x.imag()) > kPoleSnap) return false;
  const double r = std::round(x.real());
  return r <= 0.0 && std::abs(x.real() - r) <= kPoleSnap;
}

// Number of poles origin - k (k >= 0) with real part strictly above sigma.
long left_crossings(double origin, double sigma) {
  if (origin <= sigma) return 0;
  return static_cast<long>(std::floor(origin - sigma)) + 1;
}

// Number of poles origin + k (k >= 0) with real part strictly below sigma.
long right_crossings(double origin, double sigma) {
  if (origin >= sigma) return 0;
  return static_cast<long>(std::floor(sigma - origin)) + 1;
}

double half_height_for(double decay_rate, double tol) {
  if (!(decay_rate > 0.0)) {
    throw UnsupportedError("Barnes integrand does not decay along a vertical line");
  }
  const double t = (std::log(10.0 / tol) + 3.0) / decay_rate;
  return std::clamp(t, 8.0, kMaxHalfHeight);
}

// (-1)^k / k! as a log.
cplx log_residue_coefficient(long k) {
  return {-std::lgamma(static_cast<double>(k) + 1.0), (k % 2 != 0) ? kPi : 0.0};
}

// Sum of residues for the poles that sit on the wrong side of Re(s) = sigma.
// Both kinds enter with a plus sign once the orientation of the Barnes
// contour relative to the straight line is accounted for.
cplx crossed_residues(const GammaQuotient& f, double sigma) {
  cplx total = 0.0;

  auto residue_at = [&](cplx s0, int skip_plus, int skip_minus, long k) -> cplx {
    cplx log_rest = log_residue_coefficient(k) + s0 * std::log(f.base);
    for (std::size_t j = 0; j < f.minus_num.size(); ++j) {
      if (static_cast<int>(j) == skip_minus) continue;
      const cplx x = f.minus_num[j] - s0;
      if (near_nonpositive_integer(x)) {
        throw UnsupportedError("Barnes integrand has a higher-order pole on the wrong side of the line");
      }
      log_rest += log_gamma(x);
    }
    for (std::size_t j = 0; j < f.plus_num.size(); ++j) {
      if (static_cast<int>(j) == skip_plus) continue;
      const cplx x = f.plus_num[j] + s0;
      if (near_nonpositive_integer(x)) {
        throw UnsupportedError("Barnes integrand has a higher-order pole on the wrong side of the line");
      }
      log_rest += log_gamma(x);
    }
    for (const cplx& d : f.minus_den) {
      const cplx x = d - s0;
      if (near_nonpositive_integer(x)) return 0.0;
      log_rest -= log_gamma(x);
    }
    for (const cplx& e : f.plus_den) {
      const cplx x = e + s0;
      if (near_nonpositive_integer(x)) return 0.0;
      log_rest -= log_gamma(x);
    }
    return std::exp(log_rest);
  };

  for (std::size_t i = 0; i < f.plus_num.size(); ++i) {
    const cplx origin = -f.plus_num[i];
    const long count = left_crossings(origin.real(), sigma);
    for (long k = 0; k < count; ++k) {
      total += residue_at(origin - static_cast<double>(k), static_cast<int>(i), -1, k);
    }
  }
  for (std::size_t i = 0; i < f.minus_num.size(); ++i) {
    const cplx origin = f.minus_num[i];
    const long count = right_crossings(origin.real(), sigma);
    for (long k = 0; k < count; ++k) {
      total += residue_at(origin + static_cast<double>(k), -1, static_cast<int>(i), k);
    }
  }
  return total;
}

void check_line_avoids_poles(const GammaQuotient& f, double sigma) {
  auto hits = [&](double origin_re, int direction) {
    const double steps = direction > 0 ? sigma - origin_re : origin_re - sigma;
    if (steps < -kPoleSnap) return false;
    return std::abs(steps - std::round(steps)) <= kPoleSnap;
  };
  for (const cplx& b : f.minus_num) {
    if (hits(b.real(), +1)) throw ParameterError("contour abscissa passes through a pole");
  }
  for (const cplx& c : f.plus_num) {
    if (hits(-c.real(), -1)) throw ParameterError("contour abscissa passes through a pole");
  }
}

}  // namespace

cplx GammaQuotient::log_value(cplx s) const {
  cplx acc = s * std::log(base);
  for (const cplx& b : minus_num) acc += log_gamma(b - s);
  for (const cplx& c : plus_num) acc += log_gamma(c + s);
  for (const cplx& d : minus_den) acc -= log_gamma(d - s);
  for (const cplx& e : plus_den) acc -= log_gamma(e + s);
  return acc;
}

cplx GammaQuotient::value(cplx s) const {
  for (const cplx& d : minus_den) {
    if (is_nonpositive_integer(d - s)) return 0.0;
  }
  for (const cplx& e : plus_den) {
    if (is_nonpositive_integer(e + s)) return 0.0;
  }
  return std::exp(log_value(s));
}

std::vector<cplx> GammaQuotient::left_pole_origins() const {
  std::vector<cplx> out;
  out.reserve(plus_num.size());
  for (const cplx& c : plus_num) out.push_back(-c);
  return out;
}

std::vector<cplx> GammaQuotient::right_pole_origins() const { return minus_num; }

double GammaQuotient::decay_rate() const {
  const double lambda =
      0.5 * (static_cast<double>(minus_num.size() + plus_num.size()) -
             static_cast<double>(minus_den.size() + plus_den.size()));
  return kPi * lambda - std::abs(std::arg(base));
}

ContourSpec choose_contour(std::span<const cplx> left_poles, std::span<const cplx> right_poles,
                           double decay_rate, double tol) {
  ContourSpec c;
  c.half_height = half_height_for(decay_rate, tol);
  if (left_poles.empty() && right_poles.empty()) {
    c.abscissa = 0.0;
    return c;
  }
  double max_left = -std::numeric_limits<double>::infinity();
  double min_right = std::numeric_limits<double>::infinity();
  for (const cplx& l : left_poles) max_left = std::max(max_left, l.real());
  for (const cplx& r : right_poles) min_right = std::min(min_right, r.real());
  if (left_poles.empty()) {
    c.abscissa = min_right - 0.5;
  } else if (right_poles.empty()) {
    c.abscissa = max_left + 0.5;
  } else {
    if (!(max_left < min_right)) {
      throw ParameterError("choose_contour: left and right pole families interleave");
    }
    c.abscissa = 0.5 * (max_left + min_right);
  }
  return c;
}

ContourSpec choose_crossing_contour(const GammaQuotient& f, double tol) {
  const std::vector<cplx> lefts = f.left_pole_origins();
  const std::vector<cplx> rights = f.right_pole_origins();

  ContourSpec c;
  c.half_height = half_height_for(f.decay_rate(), tol);
  if (lefts.empty() || rights.empty()) {
    return choose_contour(lefts, rights, f.decay_rate(), tol);
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const cplx& v : lefts) lo = std::min(lo, v.real()), hi = std::max(hi, v.real());
  for (const cplx& v : rights) lo = std::min(lo, v.real()), hi = std::max(hi, v.real());
  lo -= 2.0;
  hi += 2.0;

  std::vector<double> points;
  for (const cplx& v : lefts) {
    for (double x = v.real(); x >= lo; x -= 1.0) points.push_back(x);
  }
  for (const cplx& v : rights) {
    for (double x = v.real(); x <= hi; x += 1.0) points.push_back(x);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  long best_crossings = std::numeric_limits<long>::max();
  double best_width = 0.0;
  double best_sigma = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double width = points[i + 1] - points[i];
    if (width < 1e-6) continue;
    const double sigma = 0.5 * (points[i] + points[i + 1]);
    long crossings = 0;
    for (const cplx& v : lefts) crossings += left_crossings(v.real(), sigma);
    for (const cplx& v : rights) crossings += right_crossings(v.real(), sigma);
    if (crossings < best_crossings ||
        (crossings == best_crossings && width > best_width + 1e-12)) {
      best_crossings = crossings;
      best_width = width;
      best_sigma = sigma;
    }
  }
  c.abscissa = best_sigma;
  return c;
}

SeriesValue mb_line_integral(const GammaQuotient& f, const ContourSpec& contour, double tol) {
  if (contour.nodes < kMinContourNodes) {
    throw ParameterError("mb_line_integral: contour needs at least 64 nodes");
  }
  const double kappa = f.decay_rate();
  if (!(kappa > 0.0)) {
    throw UnsupportedError("mb_line_integral: integrand does not decay on a vertical line");
  }
  const double sigma = contour.abscissa;
  check_line_avoids_poles(f, sigma);

  const cplx residues = crossed_residues(f, sigma);
  auto at = [&](double t) { return f.value(cplx(sigma, t)); };

  double scale = 0.0;
  for (double t : {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0}) {
    scale = std::max(scale, std::abs(at(t)));
  }
  const double norm = 1.0 / (2.0 * kPi);
  const double floor_abs = tol * 1e-3 * scale * norm;

  double half_height = contour.half_height;
  auto tail_bound = [&](double T) {
    return norm * (std::abs(at(T)) + std::abs(at(-T))) / kappa;
  };
  double tail = tail_bound(half_height);
  while (tail > 0.1 * tol * scale * norm && half_height < kMaxHalfHeight) {
    half_height = std::min(kMaxHalfHeight, half_height * 1.25);
    tail = tail_bound(half_height);
  }
  const bool tail_ok = tail <= 0.1 * tol * scale * norm;

  std::size_t nodes = contour.nodes + (contour.nodes % 2);
  double h = 2.0 * half_height / static_cast<double>(nodes);
  const std::size_t half = nodes / 2;

  cplx sum = at(0.0);
  for (std::size_t j = 1; j <= half; ++j) {
    const double t = static_cast<double>(j) * h;
    const double w = (j == half) ? 0.5 : 1.0;
    sum += w * (at(t) + at(-t));
  }
  std::size_t evaluations = nodes + 1;
  cplx line = h * norm * sum;

  double diff = std::numeric_limits<double>::infinity();
  for (int d = 0; d <= kMaxNodeDoublings; ++d) {
    // Midpoints of the current panels, from the centre outward.
    cplx mid = 0.0;
    const std::size_t panels_half = nodes / 2;
    for (std::size_t j = 0; j < panels_half; ++j) {
      const double t = (static_cast<double>(j) + 0.5) * h;
      mid += at(t) + at(-t);
    }
    evaluations += nodes;
    const cplx refined = 0.5 * line + 0.5 * h * norm * mid;
    diff = std::abs(refined - line);
    line = refined;
    nodes *= 2;
    h *= 0.5;
    if (diff <= tol * std::max(std::abs(line + residues), floor_abs / tol)) break;
  }

  SeriesValue out;
  out.value = line + residues;
  out.terms_used = evaluations;
  out.est_error = diff + tail;
  out.converged = tail_ok && out.est_error <= tol * std::max(std::abs(out.value), floor_abs / tol);
  return out;
}

SeriesValue mb_1f0(cplx a, cplx z, const ContourSpec& contour, double tol) {
  if (is_nonpositive_integer(a)) {
    throw ParameterError("mb_1f0: a is a nonpositive integer");
  }
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    throw DomainError("mb_1f0: requires |arg(-z)| < pi, i.e. z off [0, inf)");
  }
  GammaQuotient f;
  f.minus_num = {0.0};
  f.plus_num = {a};
  f.base = -z;
  SeriesValue v = mb_line_integral(f, contour, tol);
  const cplx g = gamma(a);
  v.value /= g;
  v.est_error /= std::abs(g);
  return v;
}

SeriesValue mb_1f0(cplx a, cplx z, double tol) {
  GammaQuotient f;
  f.minus_num = {0.0};
  f.plus_num = {a};
  f.base = (z.imag() == 0.0 && z.real() >= 0.0) ? cplx(1.0, 0.0) : -z;
  return mb_1f0(a, z, choose_crossing_contour(f, tol), tol);
}

namespace {

GammaQuotient pfq_integrand(const PFQParams& params) {
  const std::size_t p = params.upper.size();
  const std::size_t q = params.lower.size();
  const cplx z = params.argument;
  for (const cplx& a : params.upper) {
    if (is_nonpositive_integer(a)) {
      throw ParameterError("mb_pfq: an upper parameter is a nonpositive integer");
    }
  }
  for (const cplx& b : params.lower) {
    if (is_nonpositive_integer(b)) {
      throw ParameterError("mb_pfq: a lower parameter is a nonpositive integer");
    }
  }
  const cplx minus_z = -z;
  if (p == q + 1) {
    if (z.imag() == 0.0 && z.real() > 0.0) {
      throw DomainError("mb_pfq: p = q+1 requires |arg(-z)| < pi");
    }
  } else if (p == q) {
    if (!(minus_z.real() > 0.0)) {
      throw DomainError("mb_pfq: p = q requires |arg(-z)| < pi/2");
    }
  } else {
    throw DomainError("mb_pfq: only p = q+1 and p = q are supported");
  }
  GammaQuotient f;
  f.minus_num = {0.0};
  f.plus_num = params.upper;
  f.plus_den = params.lower;
  f.base = minus_z;
  return f;
}

}  // namespace

SeriesValue mb_pfq(const PFQParams& params, const ContourSpec& contour, double tol) {
  if (params.argument == cplx(0.0, 0.0)) {
    return SeriesValue{1.0, 0, 0.0, true};
  }
  const GammaQuotient f = pfq_integrand(params);
  SeriesValue v = mb_line_integral(f, contour, tol);
  const cplx pre = gamma_ratio({params.lower, params.upper});
  v.value *= pre;
  v.est_error *= std::abs(pre);
  return v;
}

SeriesValue mb_pfq(const PFQParams& params, double tol) {
  if (params.argument == cplx(0.0, 0.0)) {
    return SeriesValue{1.0, 0, 0.0, true};
  }
  const GammaQuotient f = pfq_integrand(params);
  return mb_pfq(params, choose_crossing_contour(f, tol), tol);
}

GConvergenceReport check_g_convergence(std::span<const cplx> a, std::span<const cplx> b,
                                       int m, int n, cplx z) {
  const int p = static_cast<int>(a.size());
  const int q = static_cast<int>(b.size());
  GConvergenceReport r;
  r.Lambda = m + n - 0.5 * (p + q);
  for (const cplx& v : b) r.nu += v;
  for (const cplx& v : a) r.nu -= v;

  const double absz = std::abs(z);
  const double argz = std::abs(std::arg(z));
  const double edge = r.Lambda * kPi;
  const bool on_edge = std::abs(argz - edge) <= 1e-12;

  r.condition_i = r.Lambda > 0.0 && argz < edge;
  r.condition_ii = on_edge && r.Lambda >= 0.0 && p == q && r.nu.real() < -1.0;
  r.iii_candidate = on_edge && r.Lambda >= 0.0 && p != q;
  r.condition_iv = q >= 1 && absz > 0.0 && (p < q || (p == q && absz < 1.0));
  r.condition_v = p >= 1 && absz > 0.0 && (p > q || (p == q && absz > 1.0));

  std::string s = "Lambda=" + std::to_string(r.Lambda) + "; holds:";
  if (r.condition_i) s += " (i)";
  if (r.condition_ii) s += " (ii)";
  if (r.condition_iv) s += " (iv)";
  if (r.condition_v) s += " (v)";
  if (!r.any()) s += " none";
  if (r.iii_candidate) s += "; (iii) applicable only with an abscissa clause, unsupported";
  r.summary = s;
  return r;
}

GammaQuotient meijer_g_integrand(std::span<const cplx> a, std::span<const cplx> b, int m,
                                 int n, cplx z) {
  const int p = static_cast<int>(a.size());
  const int q = static_cast<int>(b.size());
  if (!(p <= q) || !(1 <= m && m <= q) || !(0 <= n && n <= p)) {
    throw ParameterError("meijer_g: requires p <= q, 1 <= m <= q, 0 <= n <= p");
  }
  GammaQuotient f;
  for (int j = 0; j < m; ++j) f.minus_num.push_back(b[j]);
  for (int j = 0; j < n; ++j) f.plus_num.push_back(1.0 - a[j]);
  for (int j = n; j < p; ++j) f.minus_den.push_back(a[j]);
  for (int j = m; j < q; ++j) f.plus_den.push_back(1.0 - b[j]);
  f.base = z;
  return f;
}

namespace {

void validate_meijer(std::span<const cplx> a, std::span<const cplx> b, int m, int n, cplx z) {
  if (z == cplx(0.0, 0.0)) throw DomainError("mb_meijer_g: z = 0");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const cplx d = a[i] - b[j];
      if (d.imag() == 0.0 && d.real() >= 1.0 && d.real() == std::floor(d.real())) {
        throw ParameterError("mb_meijer_g: a_i - b_j is a positive integer");
      }
    }
  }
  const GConvergenceReport r = check_g_convergence(a, b, m, n, z);
  if (!r.any()) {
    throw ConvergenceError("mb_meijer_g: none of the convergence conditions hold (" +
                           r.summary + ")");
  }
  if (!r.condition_i) {
    throw UnsupportedError("mb_meijer_g: vertical-line integral needs condition (i) (" +
                           r.summary + ")");
  }
}

}  // namespace

SeriesValue mb_meijer_g(std::span<const cplx> a, std::span<const cplx> b, int m, int n,
                        cplx z, const ContourSpec& contour, double tol) {
  const GammaQuotient f = meijer_g_integrand(a, b, m, n, z);
  validate_meijer(a, b, m, n, z);
  return mb_line_integral(f, contour, tol);
}

SeriesValue mb_meijer_g(std::span<const cplx> a, std::span<const cplx> b, int m, int n,
                        cplx z, double tol) {
  const GammaQuotient f = meijer_g_integrand(a, b, m, n, z);
  validate_meijer(a, b, m, n, z);
  return mb_line_integral(f, choose_crossing_contour(f, tol), tol);
}

}  // namespace hypersf
