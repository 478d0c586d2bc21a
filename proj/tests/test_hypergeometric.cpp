#include <hypersf/errors.hpp>
#include <hypersf/hypergeometric.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"

using namespace hypersf;
using hypersf::test::Draws;
using hypersf::test::rel;

namespace {

cplx f21(double a, double b, double c, double z) { return hyp2f1(a, b, c, z); }

}  // namespace

TEST(PfqSeries, Examples) {
  EXPECT_LT(rel(f21(0.5, 1.5, 1.5, 0.75), cplx(2.0)), 1e-14);
  EXPECT_LT(rel(f21(1.0, 1.0, 2.0, 0.5), cplx(2.0 * std::log(2.0))), 1e-14);
  const SeriesValue poly = pfq_series({{-2.0}, {}, 5.0});
  EXPECT_TRUE(poly.converged);
  EXPECT_EQ(poly.value, cplx(16.0));
}

TEST(PfqSeries, LogClosedFormOverUnitInterval) {
  for (double z = -0.9; z <= 0.9; z += 0.15) {
    if (std::abs(z) < 1e-12) continue;
    EXPECT_LT(rel(f21(1.0, 1.0, 2.0, z), cplx(-std::log1p(-z) / z)), 1e-13) << z;
  }
}

TEST(PfqSeries, ReportsTermsAndError) {
  const SeriesValue v = pfq_series({{1.0, 1.0}, {2.0}, 0.5}, 1e-12);
  EXPECT_TRUE(v.converged);
  EXPECT_GT(v.terms_used, 10u);
  EXPECT_LE(v.est_error, 1e-12 * std::abs(v.value));
}

TEST(PfqSeries, TruncationBeatsLowerPole) {
  // (-2)_k vanishes from k = 3 on, before (-5)_k reaches zero at k = 6.
  const SeriesValue v = pfq_series({{-2.0, 1.0}, {-5.0}, 0.5});
  const double expected = 1.0 + (-2.0 * 1.0 / -5.0) * 0.5 +
                          ((-2.0 * -1.0) * (1.0 * 2.0) / ((-5.0 * -4.0) * 2.0)) * 0.25;
  EXPECT_NEAR(v.value.real(), expected, 1e-15);
}

TEST(PfqSeries, Errors) {
  EXPECT_THROW(pfq_series({{1.0, 1.0}, {-2.0}, 0.5}), PoleError);
  EXPECT_THROW(pfq_series({{1.0, 1.0, 1.0}, {2.0}, 0.1}), DivergenceError);
  EXPECT_THROW(pfq_series({{1.0, 1.0}, {2.0}, 1.5}), DivergenceError);
  EXPECT_THROW(pfq_series({{1.0, 1.0}, {2.0}, 0.999}, 1e-15, 20), ConvergenceError);
  EXPECT_EQ(pfq_series({{1.0, 1.0, 1.0}, {2.0}, 0.0}).value, cplx(1.0));
}

TEST(GaussSum, Examples) {
  EXPECT_LT(rel(gauss_sum_at_unity(0.5, 0.5, 2.0), cplx(4.0 / kPi)), 1e-14);
  EXPECT_EQ(gauss_sum_at_unity(0.0, 0.7, 2.5), cplx(1.0));
  EXPECT_LT(rel(gauss_sum_at_unity(0.5, 1.0, 2.5), cplx(1.5)), 1e-14);
  EXPECT_THROW(gauss_sum_at_unity(1.0, 1.0, 2.0), DomainError);
}

TEST(GaussSum, MatchesLimitOfPartialSums) {
  const double cases[][3] = {{0.5, 0.5, 2.0}, {0.5, 1.0, 2.5}, {0.3, 0.4, 1.9},
                             {-0.5, 1.5, 2.25}, {1.2, 0.7, 3.1}};
  for (const auto& p : cases) {
    const double oracle = test::gauss_limit_by_partial_sums(p[0], p[1], p[2]);
    EXPECT_LT(rel(gauss_sum_at_unity(p[0], p[1], p[2]).real(), oracle), 1e-6)
        << p[0] << " " << p[1] << " " << p[2];
  }
}

TEST(Hyp2F1, GaussContiguousRelation) {
  Draws d(11);
  for (int i = 0; i < 40; ++i) {
    const double a = d.uniform(-2.0, 3.0);
    const double b = d.uniform(-2.0, 3.0);
    const double c = d.uniform(0.3, 4.0);
    const double z = d.uniform(-0.5, 0.5);
    const cplx f = f21(a, b, c, z);
    const cplx fa = f21(a - 1.0, b, c, z);
    const cplx fc = f21(a, b, c + 1.0, z);
    const cplx lhs = c * (1.0 - z) * f - c * fa + (c - b) * z * fc;
    const double scale = std::abs(c * f) + std::abs(c * fa) + std::abs((c - b) * z * fc);
    EXPECT_LT(std::abs(lhs) / scale, 1e-9) << a << " " << b << " " << c << " " << z;
  }
}

TEST(Hyp2F1, EulerTransformation) {
  Draws d(12);
  for (int i = 0; i < 40; ++i) {
    const double a = d.uniform(-1.5, 2.5);
    const double b = d.uniform(-1.5, 2.5);
    const double c = d.uniform(0.5, 4.0);
    const double z = d.uniform(-0.9, 0.9);
    const cplx lhs = f21(a, b, c, z);
    const cplx rhs = std::pow(1.0 - z, c - a - b) * f21(c - a, c - b, c, z);
    EXPECT_LT(rel(lhs, rhs), 1e-10) << a << " " << b << " " << c << " " << z;
  }
}

TEST(Continued2F1, Examples) {
  const cplx v = continued_2f1(0.5, 1.0, 2.0, 4.0 / 3.0);
  EXPECT_NEAR(v.real(), 1.5, 1e-13);
  EXPECT_NEAR(v.imag(), -std::sqrt(3.0) / 2.0, 1e-13);
  EXPECT_LT(rel(continued_2f1(0.5, 1.0 / 3.0, 1.5, 0.8), f21(0.5, 1.0 / 3.0, 1.5, 0.8)), 1e-10);
  EXPECT_LT(rel(continued_2f1(0.5, 1.0, 2.0, 0.96), cplx(5.0 / 3.0)), 1e-13);
}

TEST(Continued2F1, SquareRootClosedFormOffAxis) {
  // 2F1(1/2, 1; 2; z) = 2 (1 - sqrt(1 - z)) / z with the principal root.
  for (const cplx z : {cplx(2.0, 0.5), cplx(3.0, -1.0), cplx(1.2, 2.0), cplx(0.8, 0.3)}) {
    const cplx expected = 2.0 * (1.0 - std::sqrt(1.0 - z)) / z;
    EXPECT_LT(rel(continued_2f1(0.5, 1.0, 2.0, z), expected), 1e-12) << z;
  }
}

TEST(Continued2F1, OverlapWithSeries) {
  const double params[][3] = {{0.5, 1.0 / 3.0, 1.5}, {0.25, 0.6, 1.3}, {1.5, -0.3, 2.7},
                              {0.5, 1.0, 2.0}};
  for (const auto& p : params) {
    for (double z = 0.55; z <= 0.99 + 1e-12; z += 0.04) {
      EXPECT_LT(rel(continued_2f1(p[0], p[1], p[2], z), f21(p[0], p[1], p[2], z)), 1e-9)
          << p[0] << " " << p[1] << " " << p[2] << " z=" << z;
    }
  }
}

TEST(Continued2F1, Errors) {
  EXPECT_THROW(continued_2f1(1.0, 1.0, 2.0, 3.0), ParameterError);
  EXPECT_THROW(continued_2f1(0.5, 1.0, 2.0, 0.3), ConvergenceError);
  EXPECT_THROW(continued_2f1(0.5, 1.0, 2.0, -2.0), ConvergenceError);
}
