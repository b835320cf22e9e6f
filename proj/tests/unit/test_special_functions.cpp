// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle/oracle.hpp"
#include "rwa/errors.hpp"

using namespace rwa;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(LogGamma, ExactValues) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_EQ(log_gamma(2.0), 0.0);
  EXPECT_NEAR(log_gamma(0.5), 0.5723649429247000870717, 1e-15);
  EXPECT_NEAR(log_gamma(0.5), std::log(std::sqrt(kPi)), 1e-15);
}

TEST(LogGamma, HighPrecisionReferenceValues) {
  // 40-digit reference values.
  EXPECT_LE(rel_err(log_gamma(7.5), 7.534364236758732955158), 1e-14);
  EXPECT_LE(rel_err(log_gamma(1e-3), 6.907178885383853682512), 1e-14);
  EXPECT_LE(rel_err(log_gamma(1e6), 12815504.569147611659977), 1e-14);
  EXPECT_LE(rel_err(log_gamma(1.5), -0.1207822376352452223455), 1e-13);
}

TEST(LogGamma, MatchesStirlingOracleAcrossRange) {
  for (double x = 1e-3; x < 1e6; x *= 1.37) {
    const double want = static_cast<double>(oracle::log_gamma(x));
    if (std::abs(want) < 1e-3) continue;  // relative error is ill-posed at the zeros x = 1, 2
    EXPECT_LE(rel_err(log_gamma(x), want), 1e-13) << "x = " << x;
  }
}

TEST(LogGamma, RecurrenceProperty) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> dist(0.1, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(gen);
    const double lhs = std::exp(log_gamma(x + 1.0));
    const double rhs = x * std::exp(log_gamma(x));
    EXPECT_LE(rel_err(lhs, rhs), 1e-12) << "x = " << x;
  }
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), std::domain_error);
  EXPECT_THROW(log_gamma(-1.5), std::domain_error);
}

TEST(BetaFn, Examples) {
  EXPECT_NEAR(beta_fn(1.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(beta_fn(0.5, 0.5), kPi, 1e-14);
  // 1! 2! / 4! = 1/12
  EXPECT_NEAR(beta_fn(2.0, 3.0), 1.0 / 12.0, 1e-16);
}

TEST(BetaFn, LogSpaceAvoidsOverflow) {
  // Gamma(171.5) alone overflows a double.
  const double lb = log_beta_fn(171.5, 171.5);
  EXPECT_TRUE(std::isfinite(lb));
  EXPECT_NEAR(lb, static_cast<double>(oracle::log_beta(171.5L, 171.5L)), 1e-10);
  EXPECT_GT(beta_fn(50.5, 50.5), 0.0);
}

TEST(BetaFn, RejectsNonPositive) {
  EXPECT_THROW(beta_fn(0.0, 1.0), std::domain_error);
  EXPECT_THROW(beta_fn(1.0, -2.0), std::domain_error);
}

TEST(RisingFactorial, Examples) {
  EXPECT_EQ(rising_factorial(3.0, 0), 1.0);
  EXPECT_EQ(rising_factorial(2.0, 3), 24.0);
  EXPECT_EQ(rising_factorial(0.5, 4), 6.5625);
  EXPECT_EQ(rising_factorial(-2.0, 3), 0.0);
}

TEST(RegIncBeta, Examples) {
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) EXPECT_NEAR(reg_inc_beta(x, 1.0, 1.0), x, 1e-15);
  for (double p : {0.5, 1.0, 2.5, 7.0}) EXPECT_NEAR(reg_inc_beta(0.5, p, p), 0.5, 1e-14);
  EXPECT_NEAR(reg_inc_beta(0.5, 2.0, 3.0), 0.6875, 1e-15);
}

TEST(RegIncBeta, PolynomialOracleForIntegerShapes) {
  // I_x(2,3) = int_0^x 12 t (1-t)^2 dt = 6x^2 - 8x^3 + 3x^4.
  for (double x = 0.0; x <= 1.0; x += 0.0625) {
    const double want = 6 * x * x - 8 * x * x * x + 3 * x * x * x * x;
    EXPECT_NEAR(reg_inc_beta(x, 2.0, 3.0), want, 1e-14) << "x = " << x;
  }
}

TEST(RegIncBeta, ReferenceValues) {
  EXPECT_NEAR(reg_inc_beta(0.3, 0.5, 3.5), 0.8731296330763289928771, 1e-13);
  EXPECT_NEAR(reg_inc_beta(0.99, 5.0, 0.5), 0.7571581091015625, 1e-13);
}

TEST(RegIncBeta, ReflectionAndMonotonicity) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> shape(0.2, 20.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double p = shape(gen);
    const double q = shape(gen);
    const double x = unit(gen);
    EXPECT_NEAR(reg_inc_beta(x, p, q) + reg_inc_beta(1.0 - x, q, p), 1.0, 1e-12);
    double previous = 0.0;
    for (double t = 0.0; t <= 1.0; t += 0.05) {
      const double v = reg_inc_beta(t, p, q);
      EXPECT_GE(v, previous);
      previous = v;
    }
  }
}

TEST(RegIncBeta, DomainErrors) {
  EXPECT_THROW(reg_inc_beta(-0.1, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(reg_inc_beta(1.1, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(reg_inc_beta(0.5, 0.0, 1.0), std::domain_error);
}

TEST(Hyp2F1, ZeroArgument) {
  EXPECT_EQ(hyp2f1({2.0, 1.0, 3.0, 0.0}, Hyp2F1Route::series), 1.0);
  EXPECT_NEAR(hyp2f1({2.0, 1.0, 3.0, 0.0}, Hyp2F1Route::euler_integral), 1.0, 1e-14);
}

TEST(Hyp2F1, EqualUpperLowerReducesToPower) {
  // F(r, s; r; z) = (1 - z)^(-s)
  for (auto route : {Hyp2F1Route::series, Hyp2F1Route::euler_integral}) {
    EXPECT_NEAR(hyp2f1({2.0, 1.0, 2.0, 0.5}, route), 2.0, 1e-12);
  }
}

TEST(Hyp2F1, LogarithmCase) {
  // F(1, 1; 2; z) = -ln(1 - z) / z
  const double want = 1.3862943611198906188;
  EXPECT_LE(rel_err(hyp2f1({1.0, 1.0, 2.0, 0.5}, Hyp2F1Route::series), want), 1e-14);
  EXPECT_LE(rel_err(hyp2f1({1.0, 1.0, 2.0, 0.5}, Hyp2F1Route::euler_integral), want), 1e-12);
}

TEST(Hyp2F1, ReferenceValues) {
  EXPECT_LE(rel_err(hyp2f1({0.7, 1.3, 2.9, -0.8}, Hyp2F1Route::series), 0.8176277141847772508879), 1e-13);
  EXPECT_LE(rel_err(hyp2f1({3.0, 0.5, 1.5, 0.9}, Hyp2F1Route::series), 29.46880407678023180895), 1e-12);
  EXPECT_LE(rel_err(hyp2f1({3.0, 0.5, 1.5, 0.9}, Hyp2F1Route::euler_integral), 29.46880407678023180895),
            1e-10);
}

TEST(Hyp2F1, TerminatingSeries) {
  // c = -2 truncates after the z^2 term.
  const double z = 0.3, a = 1.0, b = 2.0;
  const double want = 1.0 - 2.0 * a * z / b + a * (a + 1.0) * z * z / (b * (b + 1.0));
  EXPECT_NEAR(hyp2f1({-2.0, a, b, z}, Hyp2F1Route::series), want, 1e-15);
}

TEST(Hyp2F1, RoutesAgreeOnCommonDomain) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> cdist(-3.0, 6.0);
  std::uniform_real_distribution<double> adist(0.05, 5.0);
  std::uniform_real_distribution<double> gap(0.05, 5.0);
  std::uniform_real_distribution<double> zdist(-0.9, 0.9);
  for (int i = 0; i < 400; ++i) {
    const Hyp2F1Params params{cdist(gen), adist(gen), 0.0, zdist(gen)};
    Hyp2F1Params p = params;
    p.b = p.a + gap(gen);
    const double s = hyp2f1(p, Hyp2F1Route::series);
    const double e = hyp2f1(p, Hyp2F1Route::euler_integral);
    EXPECT_LE(rel_err(e, s), 1e-9) << "c=" << p.c << " a=" << p.a << " b=" << p.b << " z=" << p.z;
  }
}

TEST(Hyp2F1, PowerIdentityProperty) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> zdist(-0.9, 0.9);
  for (int i = 0; i < 400; ++i) {
    const double r = 10.0 * (1.0 - unit(gen));  // (0, 10]
    const double s = r * (0.001 + 0.998 * unit(gen));
    const double z = zdist(gen);
    for (auto route : {Hyp2F1Route::series, Hyp2F1Route::euler_integral}) {
      const double v = hyp2f1({r, s, r, z}, route) * std::pow(1.0 - z, s);
      EXPECT_NEAR(v, 1.0, 1e-12) << "r=" << r << " s=" << s << " z=" << z;
    }
  }
}

TEST(Hyp2F1, NearlySingularEulerWeight) {
  // s = 1e-5 leaves almost all of t^(s-1) below the smallest double.
  for (double z : {-0.9, -0.3, 0.4, 0.9}) {
    for (auto [r, s] : {std::pair{2.0, 1e-5}, {2.0, 2.0 - 1e-5}, {1e-3, 5e-4}}) {
      const double v = hyp2f1({r, s, r, z}, Hyp2F1Route::euler_integral) * std::pow(1.0 - z, s);
      EXPECT_NEAR(v, 1.0, 1e-12) << "r=" << r << " s=" << s << " z=" << z;
    }
  }
}

TEST(Hyp2F1, LargeParametersNegativeArgument) {
  // Alternating terms up to ~1e3 in magnitude for the untransformed series.
  const double want = std::pow(1.0 + 0.87, -7.1);
  EXPECT_LE(rel_err(hyp2f1({7.5, 7.1, 7.5, -0.87}, Hyp2F1Route::series), want), 1e-13);
  EXPECT_LE(rel_err(hyp2f1({7.5, 7.1, 7.5, -0.87}, Hyp2F1Route::euler_integral), want), 1e-12);
}

TEST(Hyp2F1, SeriesNonConvergenceThrows) {
  EXPECT_THROW(hyp2f1({1.0, 1.0, 1.5, 0.99999999}, Hyp2F1Route::series), ConvergenceError);
}

TEST(Hyp2F1, DomainErrors) {
  EXPECT_THROW(hyp2f1({1.0, 1.0, 2.0, 1.0}, Hyp2F1Route::series), std::domain_error);
  EXPECT_THROW(hyp2f1({1.0, 1.0, -2.0, 0.5}, Hyp2F1Route::series), std::domain_error);
  EXPECT_THROW(hyp2f1({1.0, 2.0, 2.0, 0.5}, Hyp2F1Route::euler_integral), std::domain_error);
  EXPECT_THROW(hyp2f1({1.0, 0.0, 2.0, 0.5}, Hyp2F1Route::euler_integral), std::domain_error);
  EXPECT_THROW(hyp2f1({1.0, 0.5, 2.0, -1.0}, Hyp2F1Route::euler_integral), std::domain_error);
}
