#include <hypersf/quadrature.hpp>

#include <hypersf/errors.hpp>
#include <hypersf/types.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace hypersf {

namespace {

// Kronrod abscissae; odd indices are the Gauss-7 nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.lo > y.lo;
  }
};

Panel gk15(const RealFn& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return Panel{lo, hi, k * h, std::abs((k - g) * h)};
}

double sqr(double x) { return x * x; }

}  // namespace

QuadResult integrate_1d(const RealFn& f, double lo, double hi, double tol, double tol_abs) {
  QuadResult out;
  if (lo == hi) return out;
  if (hi < lo) {
    out = integrate_1d(f, hi, lo, tol, tol_abs);
    out.value = -out.value;
    return out;
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  heap.push(gk15(f, lo, hi));
  out.evaluations = 15;
  std::size_t panels = 1;

  auto totals = [&](double& value, double& error) {
    auto copy = heap;
    std::vector<Panel> all;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    value = 0.0;
    error = 0.0;
    for (const Panel& p : all) {
      value += p.value;
      error += p.error;
    }
  };

  double value = heap.top().value;
  double error = heap.top().error;
  while (error > std::max(tol * std::abs(value), tol_abs)) {
    if (panels >= kMaxPanels) {
      throw ConvergenceError("integrate_1d: panel limit reached");
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw ConvergenceError("integrate_1d: panel width underflow");
    }
    const Panel left = gk15(f, worst.lo, mid);
    const Panel right = gk15(f, mid, worst.hi);
    heap.push(left);
    heap.push(right);
    out.evaluations += 30;
    ++panels;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    // Refresh the running totals so round-off does not accumulate.
    if (panels % 64 == 0 || error <= std::max(tol * std::abs(value), tol_abs)) {
      totals(value, error);
    }
  }
  totals(value, error);
  out.value = value;
  out.est_error = error;
  return out;
}

QuadResult integrate_tanh_sinh(const RealFn& f, double lo, double hi, double tol) {
  constexpr double kTMax = 4.5;
  constexpr int kMaxLevels = 12;
  const double half = 0.5 * (hi - lo);
  QuadResult out;
  if (lo == hi) return out;

  auto contribution = [&](double t) {
    const double y = 0.5 * kPi * std::sinh(t);
    const double cy = std::cosh(y);
    const double w = 0.5 * kPi * std::cosh(t) / (cy * cy);
    double x;
    if (t < 0.0) {
      x = lo + half * (2.0 / (1.0 + std::exp(-2.0 * y)));
    } else {
      x = hi - half * (2.0 / (1.0 + std::exp(2.0 * y)));
    }
    if (!(x > lo && x < hi) || w == 0.0) return 0.0;
    ++out.evaluations;
    return half * w * f(x);
  };

  double h = 1.0;
  double sum = contribution(0.0);
  for (double t = h; t <= kTMax; t += h) sum += contribution(-t) + contribution(t);
  double estimate = h * sum;
  for (int level = 1; level <= kMaxLevels; ++level) {
    h *= 0.5;
    double added = 0.0;
    for (double t = h; t <= kTMax; t += 2.0 * h) added += contribution(-t) + contribution(t);
    sum += added;
    const double next = h * sum;
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= tol * std::abs(estimate)) {
      out.value = estimate;
      out.est_error = diff;
      return out;
    }
  }
  throw ConvergenceError("integrate_tanh_sinh: no agreement between levels");
}

namespace {

double ellipse_k(const GeometryParams& p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return sqr(c / p.a) + sqr(s / p.b);
}

double inner_t(const GeometryParams& p, double theta, double tol, std::size_t& evals) {
  const double k = ellipse_k(p, theta);
  const double kc2 = k * p.c * p.c;
  const QuadResult r = integrate_1d(
      [&](double t) { return std::sqrt(t * t * (1.0 + kc2) + kc2); }, 0.0, p.H / p.c, tol);
  evals += r.evaluations;
  return r.value;
}

}  // namespace

QuadResult surface_integral_sector(const GeometryParams& p, double theta0, double theta1,
                                   double tol) {
  p.validate();
  QuadResult out;
  if (p.H == 0.0) return out;
  std::size_t inner_evals = 0;
  const QuadResult r = integrate_1d(
      [&](double th) { return inner_t(p, th, tol / 10.0, inner_evals); }, theta0, theta1, tol);
  out.value = p.a * p.b * r.value;
  out.est_error = p.a * p.b * r.est_error;
  out.evaluations = r.evaluations + inner_evals;
  return out;
}

QuadResult surface_integral_oracle(const GeometryParams& p, double tol) {
  QuadResult q = surface_integral_sector(p, 0.0, 0.5 * kPi, tol);
  q.value *= 4.0;
  q.est_error *= 4.0;
  return q;
}

QuadResult surface_integral_oracle_u(const GeometryParams& p, double tol) {
  p.validate();
  QuadResult out;
  if (p.H == 0.0) return out;
  const double vmax = sqr(p.H / p.c);  // lambda^2 - 1
  std::size_t inner_evals = 0;
  const QuadResult r = integrate_1d(
      [&](double th) {
        const double kc2 = ellipse_k(p, th) * p.c * p.c;
        const QuadResult in = integrate_tanh_sinh(
            [&](double v) { return 0.5 * std::sqrt(1.0 + kc2 * (v + 1.0) / v); }, 0.0, vmax,
            tol / 10.0);
        inner_evals += in.evaluations;
        return in.value;
      },
      0.0, 0.5 * kPi, tol);
  out.value = 4.0 * p.a * p.b * r.value;
  out.est_error = 4.0 * p.a * p.b * r.est_error;
  out.evaluations = r.evaluations + inner_evals;
  return out;
}

QuadResult revolve_oracle(const GeometryParams& p, double tol) {
  GeometryParams q = p;
  q.allow_circular = true;
  q.validate();
  if (p.a != p.b) throw ParameterError("revolve_oracle: requires a == b");
  QuadResult out;
  if (p.H == 0.0) return out;
  const double a = p.a;
  const double c2 = p.c * p.c;
  QuadResult r = integrate_1d(
      [&](double z) {
        const double g = std::sqrt(1.0 + z * z / c2);
        const double x = a * g;
        const double dx = a * z / (c2 * g);
        return x * std::sqrt(1.0 + dx * dx);
      },
      0.0, p.H, tol);
  r.value *= 2.0 * kPi;
  r.est_error *= 2.0 * kPi;
  return r;
}

QuadResult volume_slice_oracle(const GeometryParams& p, double tol) {
  GeometryParams q = p;
  q.allow_circular = true;
  q.validate();
  QuadResult out;
  if (p.H == 0.0) return out;
  const double c2 = p.c * p.c;
  QuadResult r = integrate_1d([&](double z) { return 1.0 + z * z / c2; }, 0.0, p.H, tol);
  const double s = kPi * p.a * p.b;
  r.value *= s;
  r.est_error *= s;
  return r;
}

}  // namespace hypersf
