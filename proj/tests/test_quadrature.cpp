#include <hypersf/errors.hpp>
#include <hypersf/quadrature.hpp>
#include <hypersf/types.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"

using namespace hypersf;
using hypersf::test::rel;

TEST(Integrate1d, Examples) {
  const double tol = 1e-13;
  EXPECT_NEAR(integrate_1d([](double t) { return std::sin(t) * std::sin(t); }, 0.0, kPi / 2, tol)
                  .value,
              kPi / 4.0, 1e-14);
  EXPECT_NEAR(integrate_1d([](double r) { return 1.0 / r - r; }, 1.0, std::sqrt(2.0), tol).value,
              std::log(2.0) / 2.0 - 0.5, 1e-14);
  EXPECT_NEAR(integrate_1d(
                  [](double t) {
                    const double c = std::cos(t), s = std::sin(t);
                    return c * c / 4.0 + s * s;
                  },
                  -kPi, kPi, tol)
                  .value,
              5.0 * kPi / 4.0, 1e-13);
}

TEST(Integrate1d, PolynomialsExactOnOnePanel) {
  for (int deg = 0; deg <= 9; ++deg) {
    const QuadResult q = integrate_1d([deg](double x) { return std::pow(x, deg); }, -0.3, 1.7, 1.0);
    const double exact = (std::pow(1.7, deg + 1) - std::pow(-0.3, deg + 1)) / (deg + 1);
    EXPECT_EQ(q.evaluations, 15u) << deg;
    EXPECT_LT(rel(q.value, exact), 1e-14) << deg;
  }
}

TEST(Integrate1d, ToleranceIsMet) {
  struct Case {
    double (*f)(double);
    double lo, hi, exact;
  };
  const Case corpus[] = {
      {[](double t) { return std::sin(t) * std::sin(t); }, 0.0, kPi / 2, kPi / 4},
      {[](double r) { return 1.0 / r - r; }, 1.0, std::sqrt(2.0), std::log(2.0) / 2 - 0.5},
      {[](double t) { return std::exp(-t * t); }, 0.0, 3.0, std::sqrt(kPi) / 2 * std::erf(3.0)},
      {[](double t) { return 1.0 / (1.0 + 25.0 * t * t); }, -1.0, 1.0, 0.4 * std::atan(5.0)},
      {[](double t) { return std::sqrt(t); }, 0.0, 1.0, 2.0 / 3.0},
  };
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    for (const Case& c : corpus) {
      const QuadResult q = integrate_1d(c.f, c.lo, c.hi, tol);
      EXPECT_LE(std::abs(q.value - c.exact), tol * std::abs(c.exact)) << tol;
    }
  }
}

TEST(Integrate1d, HalvingToleranceStaysWithinEstimate) {
  auto f = [](double t) { return std::exp(std::sin(3.0 * t)) / (1.0 + t * t); };
  for (double tol : {1e-5, 1e-8, 1e-11}) {
    const QuadResult q1 = integrate_1d(f, -2.0, 5.0, tol);
    const QuadResult q2 = integrate_1d(f, -2.0, 5.0, tol / 2.0);
    EXPECT_LE(std::abs(q2.value - q1.value), q1.est_error) << tol;
  }
}

TEST(Integrate1d, ReversedLimitsAndEmpty) {
  auto f = [](double t) { return t * t; };
  EXPECT_NEAR(integrate_1d(f, 1.0, 0.0, 1e-12).value, -1.0 / 3.0, 1e-15);
  EXPECT_EQ(integrate_1d(f, 2.0, 2.0, 1e-12).value, 0.0);
}

TEST(Integrate1d, PanelLimit) {
  EXPECT_THROW(integrate_1d([](double t) { return std::sin(1.0 / t); }, 1e-9, 1.0, 1e-15),
               ConvergenceError);
}

TEST(TanhSinh, EndpointSingularities) {
  EXPECT_LT(rel(integrate_tanh_sinh([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12)
                    .value,
                2.0),
            1e-11);
  EXPECT_LT(rel(integrate_tanh_sinh([](double t) { return std::log(t); }, 0.0, 1.0, 1e-12).value,
                -1.0),
            1e-11);
  // 1/sqrt(1 - t^2) on [-1, 1], folded and shifted so both singular ends sit at u = 0.
  EXPECT_LT(rel(2.0 * integrate_tanh_sinh([](double u) { return 1.0 / std::sqrt(u * (2.0 - u)); },
                                          0.0, 1.0, 1e-12)
                          .value,
                kPi),
            1e-11);
}

TEST(TanhSinh, AgreesWithSimpsonOracle) {
  auto f = [](double t) { return std::cos(t) * std::exp(-t); };
  const double ref = test::simpson(f, 0.0, 3.0, 1e-13);
  EXPECT_LT(rel(integrate_tanh_sinh(f, 0.0, 3.0, 1e-12).value, ref), 1e-11);
}

TEST(SurfaceOracle, DegenerateCap) {
  EXPECT_EQ(surface_integral_oracle({1.2, 1.0, 2.0, 0.0}).value, 0.0);
  EXPECT_EQ(surface_integral_oracle_u({1.2, 1.0, 2.0, 0.0}).value, 0.0);
}

TEST(SurfaceOracle, SmallCapApproachesZero) {
  const double a = 1.2, b = 1.0;
  double prev = 1.0;
  for (double H : {1e-2, 1e-3, 1e-4}) {
    const double v = surface_integral_oracle({a, b, 2.0, H}).value;
    EXPECT_LT(v, prev);
    prev = v;
  }
  // To first order the cap is a strip of the waist ellipse of height H.
  const double perimeter = 4.0 * a * std::comp_ellint_2(std::sqrt(1.0 - b * b / (a * a)));
  EXPECT_LT(rel(prev / 1e-4, perimeter), 1e-6);
}

TEST(SurfaceOracle, QuadrantsAreSymmetric) {
  const GeometryParams p{1.3, 1.0, 1.5, 0.8};
  const double q1 = surface_integral_sector(p, 0.0, kPi / 2, 1e-12).value;
  const double q2 = surface_integral_sector(p, kPi / 2, kPi, 1e-12).value;
  const double q3 = surface_integral_sector(p, -kPi, -kPi / 2, 1e-12).value;
  const double q4 = surface_integral_sector(p, -kPi / 2, 0.0, 1e-12).value;
  EXPECT_LT(rel(q2, q1), 1e-11);
  EXPECT_LT(rel(q3, q1), 1e-11);
  EXPECT_LT(rel(q4, q1), 1e-11);
  EXPECT_LT(rel(q1 + q2 + q3 + q4, surface_integral_oracle(p, 1e-12).value), 1e-11);
}

TEST(SurfaceOracle, TwoSubstitutionsAgree) {
  for (const GeometryParams& p : {GeometryParams{1.2, 1.0, 2.0, 1.0},
                                  GeometryParams{1.01, 1.0, 1.5, 0.5},
                                  GeometryParams{3.0, 1.0, 0.5, 2.0}}) {
    EXPECT_LT(rel(surface_integral_oracle(p).value, surface_integral_oracle_u(p).value), 1e-9);
  }
}

TEST(RevolveOracle, MatchesSurfaceOracle) {
  for (const GeometryParams& p : {GeometryParams{1.0, 1.0, 2.0, 1.0, true},
                                  GeometryParams{1.0, 1.0, 1.0, 1.0, true},
                                  GeometryParams{2.0, 2.0, 1.0, 3.0, true}}) {
    EXPECT_LT(rel(revolve_oracle(p).value, surface_integral_oracle(p).value), 1e-9);
  }
  EXPECT_EQ(revolve_oracle({1.0, 1.0, 1.0, 0.0, true}).value, 0.0);
  EXPECT_THROW(revolve_oracle({1.2, 1.0, 1.0, 1.0}), ParameterError);
}

TEST(VolumeSliceOracle, Examples) {
  EXPECT_LT(rel(volume_slice_oracle({1.0, 1.0, 1.0, 1.0, true}).value, 4.0 * kPi / 3.0), 1e-14);
  EXPECT_LT(rel(volume_slice_oracle({2.0, 1.0, 1.0, 1.0}).value, 8.0 * kPi / 3.0), 1e-14);
  EXPECT_EQ(volume_slice_oracle({2.0, 1.0, 1.0, 0.0}).value, 0.0);
}

TEST(GeometryValidation, RejectsBadParameters) {
  EXPECT_THROW(surface_integral_oracle({1.0, 1.2, 1.0, 1.0}), ParameterError);
  EXPECT_THROW(surface_integral_oracle({1.0, 1.0, 1.0, 1.0}), ParameterError);
  EXPECT_THROW(surface_integral_oracle({1.2, 1.0, 0.0, 1.0}), ParameterError);
  EXPECT_THROW(surface_integral_oracle({1.2, 1.0, 1.0, -1.0}), ParameterError);
  EXPECT_THROW(surface_integral_oracle({1.2, 0.0, 1.0, 1.0}), ParameterError);
}
