// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace rwa {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// ln B(p, q) for p, q > 0.
double log_beta_fn(double p, double q);

// B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q), evaluated in log space.
double beta_fn(double p, double q);

// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
double rising_factorial(double a, unsigned n);

// Regularized incomplete beta I_x(p, q) for x in [0, 1].
double reg_inc_beta(double x, double p, double q);

/// Arguments of the Gauss function F(c, a; b; z) = sum (c)_n (a)_n / ((b)_n n!) z^n.
struct Hyp2F1Params {
  double c;
  double a;
  double b;
  double z;
};

enum class Hyp2F1Route { series, euler_integral };

inline constexpr int kHyp2F1MaxTerms = 10'000;

/*!
 * Gauss hypergeometric function for real |z| < 1.
 *
 * The series route sums terms until the next one is below 1e-15 of the
 * running sum and throws ConvergenceError past kHyp2F1MaxTerms terms; it
 * rejects b in {0, -1, -2, ...}. The Euler route integrates
 *   t^(a-1) (1-t)^(b-a-1) (1-zt)^(-c) / B(a, b-a)
 * over (0, 1) with the tanh-sinh engine and requires b > a > 0.
 */
double hyp2f1(const Hyp2F1Params& params, Hyp2F1Route route);

}  // namespace rwa
