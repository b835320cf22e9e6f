// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

// Reference computations used only by tests. Everything here works in long
// double and shares no code path with the library (no tanh-sinh, no Boost,
// no moment recurrence).

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace rwa::oracle {

using Real = long double;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
struct GaussLegendre {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  explicit GaussLegendre(int n) : nodes(n), weights(n) {
    for (int i = 0; i < n; ++i) {
      Real x = std::cos(std::numbers::pi_v<Real> * (i + 0.75L) / (n + 0.5L));
      Real dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        Real p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        const Real dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-19L) break;
      }
      nodes[i] = x;
      weights[i] = 2 / ((1 - x * x) * dp * dp);
    }
  }
};

// Composite 20-point Gauss-Legendre over [lo, hi] with `panels` equal panels.
inline Real integrate(const std::function<Real(Real)>& f, Real lo, Real hi, int panels = 400) {
  static const GaussLegendre rule(20);
  const Real width = (hi - lo) / panels;
  Real sum = 0;
  for (int k = 0; k < panels; ++k) {
    const Real mid = lo + (k + 0.5L) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * f(mid + 0.5L * width * rule.nodes[i]);
    }
  }
  return 0.5L * width * sum;
}

// ln Gamma by upward shift and the Stirling series.
inline Real log_gamma(Real x) {
  Real shift = 0;
  while (x < 30) {
    shift += std::log(x);
    x += 1;
  }
  const Real x2 = 1 / (x * x);
  const Real series =
      (1.0L / 12 - x2 * (1.0L / 360 - x2 * (1.0L / 1260 - x2 * (1.0L / 1680 - x2 * (1.0L / 1188)))))
      / x;
  return (x - 0.5L) * std::log(x) - x + 0.5L * std::log(2 * std::numbers::pi_v<Real>) + series -
         shift;
}

inline Real log_beta(Real p, Real q) { return log_gamma(p) + log_gamma(q) - log_gamma(p + q); }

/*!
 * E[g(X)] for X ~ beta(p, q) on [a, b] through x = a + (b-a) sin^2(theta):
 *
 *   E[g(X)] = 2/B(p,q) * int_0^{pi/2} g(x(theta)) sin^{2p-1} cos^{2q-1} d theta.
 *
 * The substituted integrand is smooth whenever 2p-1 and 2q-1 are
 * nonnegative integers, which covers every shape used in the tests.
 */
inline Real beta_expectation(Real p, Real q, Real a, Real b, const std::function<Real(Real)>& g,
                             int panels = 400) {
  const Real norm = std::exp(-log_beta(p, q));
  auto integrand = [&](Real theta) {
    const Real s = std::sin(theta);
    const Real c = std::cos(theta);
    return g(a + (b - a) * s * s) * std::pow(s, 2 * p - 1) * std::pow(c, 2 * q - 1);
  };
  return 2 * norm * integrate(integrand, 0, std::numbers::pi_v<Real> / 2, panels);
}

// Additive Stieltjes transform E[(1 - zX)^(-d)] by beta_expectation.
inline Real ast(Real p, Real q, Real a, Real b, Real d, Real z, int panels = 400) {
  return beta_expectation(p, q, a, b, [&](Real x) { return std::pow(1 - z * x, -d); }, panels);
}

// E[X^m] by direct quadrature.
inline Real raw_moment(Real p, Real q, Real a, Real b, int m, int panels = 400) {
  return beta_expectation(p, q, a, b, [&](Real x) { return std::pow(x, static_cast<Real>(m)); }, panels);
}

}  // namespace rwa::oracle
