#include <hypersf/gamma.hpp>

#include <hypersf/errors.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace hypersf {

namespace {

// Lanczos coefficients for g = 607/128 (shift 671/128 = g + 1/2), as
// tabulated by Godfrey. Gamma(z) = sqrt(2 pi) (z+g+1/2)^(z+1/2)
// exp(-(z+g+1/2)) * series / z in the half plane Re(z) > 0.
constexpr double kLanczosShift = 5.24218750000000000;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoef = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,
    -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

// Generic |n| at or below this uses an explicit product of factors.
constexpr long kDirectPochhammerLimit = 24;

// sin(pi x), cos(pi x) with exact argument reduction modulo 2.
void sincos_pi(double x, double& s, double& c) {
  double r = std::fmod(x, 2.0);  // exact
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) {
    s = 0.0;
    c = (r == 0.0) ? 1.0 : -1.0;
    return;
  }
  if (r == 0.5 || r == -1.5) {
    s = 1.0;
    c = 0.0;
    return;
  }
  if (r == -0.5 || r == 1.5) {
    s = -1.0;
    c = 0.0;
    return;
  }
  s = std::sin(kPi * r);
  c = std::cos(kPi * r);
}

cplx lanczos_log_gamma(cplx z) {
  cplx series = kLanczosC0;
  for (std::size_t j = 0; j < kLanczosCoef.size(); ++j) {
    series += kLanczosCoef[j] / (z + static_cast<double>(j + 1));
  }
  const cplx t = z + kLanczosShift;
  return (z + 0.5) * std::log(t) - t + std::log(kSqrtTwoPi * series / z);
}

std::string describe(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", z.real(), z.imag());
  return buf;
}

}  // namespace

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

cplx log_sin_pi(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  if (std::abs(y) <= 20.0) {
    double s, c;
    sincos_pi(x, s, c);
    const cplx v(s * std::cosh(kPi * y), c * std::sinh(kPi * y));
    return std::log(v);
  }
  const cplx i(0.0, 1.0);
  if (y > 0.0) {
    // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) (i/2)
    return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) +
           std::log(cplx(0.0, 0.5));
  }
  // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) (-i/2)
  return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) +
         std::log(cplx(0.0, -0.5));
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at " + describe(z));
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

cplx gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() <= 171.0 &&
      z.real() == std::floor(z.real())) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(z.real()); ++k) f *= k;
    return f;
  }
  return std::exp(log_gamma(z));
}

cplx PochhammerLog::value() const {
  return zero ? cplx(0.0, 0.0) : std::exp(log);
}

PochhammerLog log_pochhammer(cplx a, long n) {
  PochhammerLog out;
  if (n == 0) return out;

  const bool a_pole = is_nonpositive_integer(a);
  if (a_pole && n > 0 && static_cast<double>(n) > -a.real()) {
    // A factor (a + k) is exactly zero: finite Gamma(a+n) over a pole.
    out.zero = true;
    return out;
  }
  if (!a_pole && is_nonpositive_integer(a + static_cast<double>(n))) {
    throw PoleError("pochhammer: Gamma(a+n) pole with finite Gamma(a), a=" +
                    describe(a) + " n=" + std::to_string(n));
  }

  if (a_pole || std::labs(n) <= kDirectPochhammerLimit) {
    if (n > 0) {
      for (long k = 0; k < n; ++k) out.log += std::log(a + static_cast<double>(k));
    } else {
      for (long k = 1; k <= -n; ++k) out.log -= std::log(a - static_cast<double>(k));
    }
    return out;
  }
  out.log = log_gamma(a + static_cast<double>(n)) - log_gamma(a);
  return out;
}

cplx pochhammer(cplx a, long n) {
  if (n == 0) return 1.0;
  if (std::labs(n) <= 64) {
    const bool a_pole = is_nonpositive_integer(a);
    if (!a_pole && is_nonpositive_integer(a + static_cast<double>(n))) {
      throw PoleError("pochhammer: Gamma(a+n) pole with finite Gamma(a), a=" +
                      describe(a) + " n=" + std::to_string(n));
    }
    cplx p = 1.0;
    if (n > 0) {
      for (long k = 0; k < n; ++k) p *= a + static_cast<double>(k);
    } else {
      for (long k = 1; k <= -n; ++k) p /= a - static_cast<double>(k);
    }
    return p;
  }
  return log_pochhammer(a, n).value();
}

double pochhammer(double a, long n) {
  return pochhammer(cplx(a, 0.0), n).real();
}

cplx gamma_ratio(const GammaRatioSpec& spec) {
  cplx log_sum = 0.0;
  int num_poles = 0;
  int den_poles = 0;

  // Residue coefficient of Gamma at -k: (-1)^k / k!.
  auto residue_log = [](cplx x) {
    const double k = -x.real();
    const double parity = std::fmod(k, 2.0);
    return cplx(-std::lgamma(k + 1.0), parity != 0.0 ? kPi : 0.0);
  };

  for (const cplx& x : spec.numerator_args) {
    if (is_nonpositive_integer(x)) {
      ++num_poles;
      log_sum += residue_log(x);
    } else {
      log_sum += log_gamma(x);
    }
  }
  for (const cplx& x : spec.denominator_args) {
    if (is_nonpositive_integer(x)) {
      ++den_poles;
      log_sum -= residue_log(x);
    } else {
      log_sum -= log_gamma(x);
    }
  }
  if (num_poles > den_poles) {
    throw DivergenceError("gamma_ratio: " + std::to_string(num_poles) +
                          " numerator pole(s) against " +
                          std::to_string(den_poles) + " in the denominator");
  }
  if (num_poles < den_poles) return 0.0;
  return std::exp(log_sum);
}

double wallis_integral(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("wallis_integral: requires alpha > -1 and beta > -1");
  }
  const GammaRatioSpec spec{{0.5 * (alpha + 1.0), 0.5 * (beta + 1.0)},
                            {0.5 * (alpha + beta + 2.0)}};
  return 0.5 * gamma_ratio(spec).real();
}

}  // namespace hypersf
