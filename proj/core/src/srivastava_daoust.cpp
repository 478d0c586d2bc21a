#include <hypersf/srivastava_daoust.hpp>

#include <hypersf/errors.hpp>
#include <hypersf/gamma.hpp>

#include "compensated_sum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <unordered_map>

namespace hypersf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kAccelStart = 24;
constexpr std::size_t kAccelWindow = 17;  // odd, so the epsilon table ends on an even column

long dot(const std::vector<long>& m, const std::vector<int>& shifts) {
  long acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * static_cast<long>(shifts[i]);
  return acc;
}

// Calls visit(m) for every m with |m| = k, lexicographically increasing.
void for_each_in_simplex(std::size_t n, long k, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> m(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == n) {
      m[i] = left;
      visit(m);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (n == 0) return;
  rec(0, k);
}

// Omega(m) x^m / m! with memoised Pochhammer logs.
class TermEvaluator {
 public:
  TermEvaluator(const SDSpec& spec, const std::vector<cplx>& x)
      : spec_(spec), x_(x), upper_global_(spec.upper_global.size()),
        lower_global_(spec.lower_global.size()) {
    for (std::size_t i = 0; i < spec.variable_count; ++i) {
      upper_local_.emplace_back(spec.upper_per_variable[i].size());
      lower_local_.emplace_back(spec.lower_per_variable[i].size());
    }
    for (const cplx& v : x) log_x_.push_back(v == cplx(0.0, 0.0) ? cplx(0.0) : std::log(v));
  }

  SDTermLog operator()(const std::vector<long>& m) {
    SDTermLog out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0 && x_[i] == cplx(0.0, 0.0)) {
        out.zero = true;
        return out;
      }
    }
    for (std::size_t j = 0; j < spec_.upper_global.size(); ++j) {
      const PochhammerLog& p = cached(upper_global_[j], spec_.upper_global[j].value,
                                      dot(m, spec_.upper_global[j].shifts));
      if (p.zero) {
        out.zero = true;
        return out;
      }
      out.log += p.log;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < spec_.upper_per_variable[i].size(); ++j) {
        const SDLocalParam& b = spec_.upper_per_variable[i][j];
        const PochhammerLog& p = cached(upper_local_[i][j], b.value, m[i] * b.shift);
        if (p.zero) {
          out.zero = true;
          return out;
        }
        out.log += p.log;
      }
    }
    for (std::size_t j = 0; j < spec_.lower_global.size(); ++j) {
      const PochhammerLog& p = cached(lower_global_[j], spec_.lower_global[j].value,
                                      dot(m, spec_.lower_global[j].shifts));
      if (p.zero) throw PoleError("sd_eval: a lower Pochhammer symbol vanishes");
      out.log -= p.log;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < spec_.lower_per_variable[i].size(); ++j) {
        const SDLocalParam& d = spec_.lower_per_variable[i][j];
        const PochhammerLog& p = cached(lower_local_[i][j], d.value, m[i] * d.shift);
        if (p.zero) throw PoleError("sd_eval: a lower Pochhammer symbol vanishes");
        out.log -= p.log;
      }
      if (m[i] > 0) {
        out.log += static_cast<double>(m[i]) * log_x_[i] -
                   std::lgamma(static_cast<double>(m[i]) + 1.0);
      }
    }
    return out;
  }

 private:
  static const PochhammerLog& cached(std::unordered_map<long, PochhammerLog>& cache, cplx a,
                                     long index) {
    auto it = cache.find(index);
    if (it == cache.end()) it = cache.emplace(index, log_pochhammer(a, index)).first;
    return it->second;
  }

  const SDSpec& spec_;
  const std::vector<cplx>& x_;
  std::vector<cplx> log_x_;
  std::vector<std::unordered_map<long, PochhammerLog>> upper_global_;
  std::vector<std::unordered_map<long, PochhammerLog>> lower_global_;
  std::vector<std::vector<std::unordered_map<long, PochhammerLog>>> upper_local_;
  std::vector<std::vector<std::unordered_map<long, PochhammerLog>>> lower_local_;
};

// Wynn's epsilon algorithm on s; returns the last even-column entry.
cplx wynn_epsilon(const std::vector<cplx>& s) {
  std::vector<cplx> prev(s.size() + 1, cplx(0.0));  // column k - 1
  std::vector<cplx> cur(s.begin(), s.end());         // column k
  cplx best = s.back();
  for (std::size_t k = 1; cur.size() > 1; ++k) {
    std::vector<cplx> next(cur.size() - 1);
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      const cplx d = cur[j + 1] - cur[j];
      if (d == cplx(0.0)) return (k % 2 == 1) ? cur[j + 1] : best;
      next[j] = prev[j + 1] + 1.0 / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) best = cur.back();
  }
  return best;
}

double x_pow_x(int v) {
  if (v == 0) return 1.0;
  return std::pow(static_cast<double>(v), static_cast<double>(v));
}

}  // namespace

void SDSpec::validate() const {
  const std::size_t n = variable_count;
  if (n == 0) throw ParameterError("SDSpec: variable_count must be positive");
  for (const auto& g : upper_global) {
    if (g.shifts.size() != n) throw ParameterError("SDSpec: upper shift vector has wrong length");
  }
  for (const auto& g : lower_global) {
    if (g.shifts.size() != n) throw ParameterError("SDSpec: lower shift vector has wrong length");
  }
  if (upper_per_variable.size() != n || lower_per_variable.size() != n) {
    throw ParameterError("SDSpec: per-variable rows must have one entry per variable");
  }
}

SDTermLog sd_term_log(const SDSpec& spec, const std::vector<long>& m, const std::vector<cplx>& x) {
  spec.validate();
  if (m.size() != spec.variable_count || x.size() != spec.variable_count) {
    throw ParameterError("sd_term_log: index or argument vector has wrong length");
  }
  return TermEvaluator(spec, x)(m);
}

SeriesValue sd_eval(const SDSpec& spec, const std::vector<cplx>& x, double tol,
                    std::size_t max_index) {
  spec.validate();
  if (x.size() != spec.variable_count) {
    throw ParameterError("sd_eval: argument vector has wrong length");
  }
  TermEvaluator term(spec, x);
  detail::CompensatedSum sum;
  sum.add(1.0);

  SeriesValue out;
  std::size_t terms = 1;
  int small_in_row = 0;
  int settled_in_row = 0;
  double previous_mass = kInf;
  std::vector<cplx> partials{sum.value()};
  std::vector<double> masses{1.0};
  cplx previous_accel = kInf;
  double previous_step = kInf;
  for (std::size_t k = 1; k <= max_index; ++k) {
    double mass = 0.0;
    for_each_in_simplex(spec.variable_count, static_cast<long>(k), [&](const std::vector<long>& m) {
      const SDTermLog t = term(m);
      ++terms;
      if (t.zero) return;
      const cplx v = std::exp(t.log);
      sum.add(v);
      mass += std::abs(v);
    });
    if (!std::isfinite(mass)) throw ConvergenceError("sd_eval: term overflow");
    const double partial = std::abs(sum.value());
    small_in_row = (mass <= tol * partial) ? small_in_row + 1 : 0;
    if (small_in_row >= 2) {
      const double r = previous_mass > 0.0 ? mass / previous_mass : 0.0;
      out.value = sum.value();
      out.terms_used = terms;
      out.est_error = (r < 1.0) ? mass * r / (1.0 - r) : mass;
      out.converged = true;
      return out;
    }
    previous_mass = mass;
    partials.push_back(sum.value());
    masses.push_back(mass);

    // Slowly decaying simplices: extrapolate the partial sums, but only while
    // the simplex mass is still clearly shrinking.
    if (k < kAccelStart) continue;
    const std::size_t w = kAccelWindow;
    if (!(masses[k] < 0.5 * masses[k - w + 1])) {
      settled_in_row = 0;
      continue;
    }
    const cplx accel =
        wynn_epsilon(std::vector<cplx>(partials.end() - static_cast<long>(w), partials.end()));
    const double step = std::abs(accel - previous_accel);
    settled_in_row = (step <= tol * std::abs(accel)) ? settled_in_row + 1 : 0;
    if (settled_in_row >= 3) {
      out.value = accel;
      out.terms_used = terms;
      out.est_error = std::max(step, previous_step);
      out.converged = true;
      return out;
    }
    previous_accel = accel;
    previous_step = step;
  }
  throw ConvergenceError("sd_eval: no convergence within max_index = " +
                         std::to_string(max_index));
}

const char* to_string(SDCase c) {
  switch (c) {
    case SDCase::I: return "I";
    case SDCase::II: return "II";
    case SDCase::IIa: return "IIa";
    case SDCase::IIb: return "IIb";
    case SDCase::III: return "III";
    case SDCase::unclassified: return "unclassified";
  }
  return "unclassified";
}

namespace {

// log E_i at mu = exp(u); +inf where a weighted sum with a nonzero exponent
// is not positive.
double log_E(const SDSpec& s, std::size_t i, const std::vector<double>& u) {
  const std::size_t n = s.variable_count;
  std::vector<double> mu(n);
  for (std::size_t l = 0; l < n; ++l) mu[l] = std::exp(u[l]);

  int exponent = 1;
  for (const auto& d : s.lower_per_variable[i]) exponent += d.shift;
  for (const auto& b : s.upper_per_variable[i]) exponent -= b.shift;
  double acc = exponent * u[i];

  auto weighted = [&](const SDGlobalParam& g) {
    double w = 0.0;
    for (std::size_t l = 0; l < n; ++l) w += mu[l] * g.shifts[l];
    return w;
  };
  for (const auto& c : s.lower_global) {
    if (c.shifts[i] == 0) continue;
    const double w = weighted(c);
    if (!(w > 0.0)) return kInf;
    acc += c.shifts[i] * std::log(w);
  }
  for (const auto& a : s.upper_global) {
    if (a.shifts[i] == 0) continue;
    const double w = weighted(a);
    if (!(w > 0.0)) return kInf;
    acc -= a.shifts[i] * std::log(w);
  }
  for (const auto& d : s.lower_per_variable[i]) {
    if (d.shift < 0) return kInf;
    acc += std::log(x_pow_x(d.shift));
  }
  for (const auto& b : s.upper_per_variable[i]) {
    if (b.shift < 0) return kInf;
    acc -= std::log(x_pow_x(b.shift));
  }
  return acc;
}

// Coordinate descent in log-mu from 64 seeded starts.
double minimise_E(const SDSpec& s, std::size_t i) {
  constexpr double kBound = 20.0;
  const std::size_t n = s.variable_count;
  std::mt19937_64 rng(0x5D5D2024u + i);
  std::uniform_real_distribution<double> start(-4.0, 4.0);
  double best = kInf;
  for (int restart = 0; restart < 64; ++restart) {
    std::vector<double> u(n);
    for (double& v : u) v = start(rng);
    double f = log_E(s, i, u);
    double step = 1.0;
    for (int pass = 0; pass < 4000 && step > 1e-7; ++pass) {
      bool improved = false;
      for (std::size_t l = 0; l < n; ++l) {
        for (double dir : {1.0, -1.0}) {
          std::vector<double> trial = u;
          trial[l] = std::clamp(trial[l] + dir * step, -kBound, kBound);
          const double ft = log_E(s, i, trial);
          if (ft < f) {
            f = ft;
            u = std::move(trial);
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::min(best, f);
  }
  return std::exp(best);
}

// Ratio r from samples at k, 2k, 4k of C k^p r^k; the second difference
// cancels the power p, which otherwise biases short ranges badly.
double growth_ratio(double log_k, double log_2k, double log_4k, double k) {
  if (log_4k == -kInf) return 0.0;
  if (log_k == -kInf || log_2k == -kInf) return kInf;
  return std::exp(((log_4k - log_2k) - (log_2k - log_k)) / k);
}

}  // namespace

SDConvergenceReport sd_classify(const SDSpec& spec, const std::vector<cplx>& x) {
  spec.validate();
  const std::size_t n = spec.variable_count;
  SDConvergenceReport r;
  if (x.size() != n) {
    r.diagnostics = "argument vector has wrong length";
    return r;
  }

  for (std::size_t i = 0; i < n; ++i) {
    int d = 1;
    for (const auto& c : spec.lower_global) d += c.shifts[i];
    for (const auto& c : spec.lower_per_variable[i]) d += c.shift;
    for (const auto& a : spec.upper_global) d -= a.shifts[i];
    for (const auto& b : spec.upper_per_variable[i]) d -= b.shift;
    r.deltas.push_back(d);
  }
  const bool all_pos = std::all_of(r.deltas.begin(), r.deltas.end(), [](int d) { return d > 0; });
  const bool all_neg = std::all_of(r.deltas.begin(), r.deltas.end(), [](int d) { return d < 0; });
  const bool all_zero = std::all_of(r.deltas.begin(), r.deltas.end(), [](int d) { return d == 0; });

  auto row_uniform = [](const SDGlobalParam& g) {
    return std::all_of(g.shifts.begin(), g.shifts.end(), [&](int v) { return v == g.shifts[0]; });
  };
  r.uniform = std::all_of(spec.upper_global.begin(), spec.upper_global.end(), row_uniform) &&
              std::all_of(spec.lower_global.begin(), spec.lower_global.end(), row_uniform);

  // Empirical decay of the terms along each axis and over whole simplices.
  std::string empirical_note;
  try {
    TermEvaluator term(spec, x);
    constexpr long kAxisNear = 32;
    for (std::size_t i = 0; i < n; ++i) {
      auto axis_log = [&](long k) {
        std::vector<long> m(n, 0);
        m[i] = k;
        const SDTermLog t = term(m);
        return t.zero ? -kInf : t.log.real();
      };
      r.axis_ratio.push_back(growth_ratio(axis_log(kAxisNear), axis_log(2 * kAxisNear),
                                          axis_log(4 * kAxisNear), kAxisNear));
    }
    const long near = n > 4 ? 8 : (n > 3 ? 16 : 32);
    auto shell_log = [&](long k) {
      double best = -kInf;
      for_each_in_simplex(n, k, [&](const std::vector<long>& m) {
        const SDTermLog t = term(m);
        if (!t.zero) best = std::max(best, t.log.real());
      });
      return best;
    };
    r.joint_ratio =
        growth_ratio(shell_log(near), shell_log(2 * near), shell_log(4 * near), near);
  } catch (const Error& e) {
    r.axis_ratio.assign(n, kInf);
    r.joint_ratio = kInf;
    empirical_note = std::string("; empirical ratios unavailable: ") + e.what();
  }

  char buf[160];
  std::string diag;
  r.variable_ok.assign(n, false);
  if (all_pos) {
    r.case_label = SDCase::I;
    r.variable_ok.assign(n, true);
    r.region_ok = true;
    diag = "Case I: convergent for all finite x";
  } else if (all_neg) {
    r.case_label = SDCase::III;
    for (std::size_t i = 0; i < n; ++i) r.variable_ok[i] = x[i] == cplx(0.0, 0.0);
    r.region_ok = std::all_of(r.variable_ok.begin(), r.variable_ok.end(), [](bool b) { return b; });
    diag = "Case III: divergent unless x = 0";
  } else if (all_zero) {
    bool uniform_positive = r.uniform;
    for (const auto& g : spec.upper_global) uniform_positive &= g.shifts[0] >= 0;
    for (const auto& g : spec.lower_global) uniform_positive &= g.shifts[0] >= 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& b : spec.upper_per_variable[i]) uniform_positive &= b.shift >= 0;
      for (const auto& d : spec.lower_per_variable[i]) uniform_positive &= d.shift >= 0;
    }
    if (uniform_positive) {
      double omega = 0.0;
      for (const auto& a : spec.upper_global) omega += a.shifts[0];
      for (const auto& c : spec.lower_global) omega -= c.shifts[0];
      r.Omega = omega;
      for (std::size_t i = 0; i < n; ++i) {
        double g = 1.0;
        for (const auto& c : spec.lower_global) g *= x_pow_x(c.shifts[i]);
        for (const auto& d : spec.lower_per_variable[i]) g *= x_pow_x(d.shift);
        for (const auto& a : spec.upper_global) g /= x_pow_x(a.shifts[i]);
        for (const auto& b : spec.upper_per_variable[i]) g /= x_pow_x(b.shift);
        r.G.push_back(g);
        r.variable_ok[i] = std::abs(x[i]) / g < 1.0;
      }
      if (omega > 0.0) {
        r.case_label = SDCase::IIa;
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::pow(std::abs(x[i]) / r.G[i], 1.0 / omega);
        r.region_ok = s < 1.0;
        std::snprintf(buf, sizeof buf, "Case II(a): Omega = %g, sum (|x_i|/G_i)^(1/Omega) = %.6g", omega, s);
      } else {
        r.case_label = SDCase::IIb;
        double mx = 0.0;
        for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, std::abs(x[i]) / r.G[i]);
        r.region_ok = mx < 1.0;
        std::snprintf(buf, sizeof buf, "Case II(b): Omega = %g, max |x_i|/G_i = %.6g", omega, mx);
      }
      diag = buf;
    } else {
      r.case_label = SDCase::II;
      for (std::size_t i = 0; i < n; ++i) {
        r.rho.push_back(minimise_E(spec, i));
        r.variable_ok[i] = std::abs(x[i]) < r.rho[i] || r.axis_ratio[i] < 1.0;
      }
      r.region_ok = std::all_of(r.variable_ok.begin(), r.variable_ok.end(), [](bool b) { return b; }) &&
                    r.joint_ratio < 1.0;
      diag = "Case II (non-uniform shifts): rho_i from numeric minimisation of E_i (heuristic);"
             " region decided with the empirical term ratios";
      for (std::size_t i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "; x%zu: rho=%.6g axis_ratio=%.6g", i + 1, r.rho[i], r.axis_ratio[i]);
        diag += buf;
      }
    }
  } else {
    r.case_label = SDCase::unclassified;
    for (std::size_t i = 0; i < n; ++i) r.variable_ok[i] = r.axis_ratio[i] < 1.0;
    r.region_ok = std::all_of(r.variable_ok.begin(), r.variable_ok.end(), [](bool b) { return b; }) &&
                  r.joint_ratio < 1.0;
    diag = "mixed signs of Delta_i: region decided with the empirical term ratios only";
  }
  std::snprintf(buf, sizeof buf, "; joint_ratio=%.6g", r.joint_ratio);
  r.diagnostics = diag + buf + empirical_note;
  return r;
}

}  // namespace hypersf
