// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "rwa/errors.hpp"
#include "rwa/quadrature.hpp"

namespace rwa {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

double hyp2f1_series(const Hyp2F1Params& p) {
  require(std::abs(p.z) < 1.0, "hyp2f1: series route requires |z| < 1");
  require(!is_nonpositive_integer(p.b), "hyp2f1: b must not be a non-positive integer");

  // Negative z gives an alternating series that cancels badly for large c, a.
  // Pfaff: F(c, a; b; z) = (1 - z)^(-c) F(c, b - a; b; z / (z - 1)), with a
  // positive argument below 1/2.
  if (p.z < 0.0) {
    const Hyp2F1Params t{p.c, p.b - p.a, p.b, p.z / (p.z - 1.0)};
    return std::pow(1.0 - p.z, -p.c) * hyp2f1_series(t);
  }

  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kHyp2F1MaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (p.c + dn) * (p.a + dn) / ((p.b + dn) * (dn + 1.0)) * p.z;
    if (term == 0.0 || std::abs(term) < 1e-15 * std::abs(sum)) {
      return sum + term;
    }
    sum += term;
  }
  throw ConvergenceError("hyp2f1: series did not converge within " +
                         std::to_string(kHyp2F1MaxTerms) + " terms");
}

double hyp2f1_euler(const Hyp2F1Params& p) {
  require(p.b > p.a && p.a > 0.0, "hyp2f1: Euler integral requires b > a > 0");
  require(std::abs(p.z) < 1.0, "hyp2f1: Euler integral requires |z| < 1");

  // With beta = b - a and h(t) = (1 - zt)^(-c), the weight t^(a-1) (1-t)^(beta-1)
  // puts most of its mass below the smallest representable node once a or
  // beta is close to 0. At each such endpoint the value of h there is
  // subtracted (h0 (1-t) near 0, h1 t near 1) and integrated exactly.
  const double beta = p.b - p.a;
  const double h0 = 1.0;
  const double h1 = std::pow(1.0 - p.z, -p.c);
  const double s0 = p.a < 1.0 ? h0 : 0.0;
  const double s1 = beta < 1.0 ? h1 : 0.0;
  const double chord = (s0 * beta + s1 * p.a) / p.b;

  const double log_norm = log_beta_fn(p.a, beta);
  auto integrand = [&](double t, double from_zero, double to_one) {
    double remainder;
    if (t < 0.5) {
      const double h = s0 != 0.0 ? std::expm1(-p.c * std::log1p(-p.z * from_zero)) + (h0 - s0)
                                 : std::pow(1.0 - p.z * from_zero, -p.c);
      remainder = h + from_zero * (s0 - s1);
    } else {
      const double h = std::pow((1.0 - p.z) + p.z * to_one, -p.c) - s1;
      remainder = h + to_one * (s1 - s0);
    }
    if (remainder == 0.0) return 0.0;
    return remainder * std::exp((p.a - 1.0) * std::log(from_zero) + (beta - 1.0) * std::log(to_one) - log_norm);
  };
  quad::Options opts;
  opts.abs_tol = 1e-15 * std::abs(chord);
  opts.rel_tol = 1e-13;
  const auto r = quad::integrate(integrand, 0.0, 1.0, opts);
  const double value = chord + r.value;
  if (!r.converged && r.error_estimate > 1e-8 * std::abs(value)) {
    throw ConvergenceError("hyp2f1: Euler integral did not converge");
  }
  return value;
}

}  // namespace

double log_gamma(double x) {
  require(x > 0.0 && std::isfinite(x), "log_gamma: argument must be positive and finite");
  return boost::math::lgamma(x);
}

double log_beta_fn(double p, double q) {
  require(p > 0.0 && q > 0.0, "beta_fn: arguments must be positive");
  return log_gamma(p) + log_gamma(q) - log_gamma(p + q);
}

double beta_fn(double p, double q) { return std::exp(log_beta_fn(p, q)); }

double rising_factorial(double a, unsigned n) {
  double result = 1.0;
  for (unsigned i = 0; i < n; ++i) result *= a + static_cast<double>(i);
  return result;
}

double reg_inc_beta(double x, double p, double q) {
  require(p > 0.0 && q > 0.0, "reg_inc_beta: shape parameters must be positive");
  require(x >= 0.0 && x <= 1.0, "reg_inc_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return boost::math::ibeta(p, q, x);
}

double hyp2f1(const Hyp2F1Params& params, Hyp2F1Route route) {
  switch (route) {
    case Hyp2F1Route::series:
      return hyp2f1_series(params);
    case Hyp2F1Route::euler_integral:
      return hyp2f1_euler(params);
  }
  throw std::invalid_argument("hyp2f1: unknown route");
}

}  // namespace rwa
