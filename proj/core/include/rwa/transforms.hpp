// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rwa/distributions.hpp"

namespace rwa {

/*!
 * Additive Stieltjes transform query: E[(1 - z X)^(-d)] for X ~ dist.
 *
 * Valid when d > 0 and |z| * max(|a|, |b|) < 1; the constructor throws
 * std::domain_error otherwise.
 */
class AstQuery {
 public:
  AstQuery(IntervalBeta dist, double order, double z);

  const IntervalBeta& dist() const { return dist_; }
  double order() const { return order_; }
  double z() const { return z_; }

 private:
  IntervalBeta dist_;
  double order_;
  double z_;
};

enum class AstRoute { closed_form, quadrature, moment_series };

std::string_view to_string(AstRoute route);

struct AstValue {
  double value;
  AstRoute route;
  double est_error;
};

inline constexpr double kAstQuadratureTolerance = 1e-11;
inline constexpr double kAstQuadratureFailThreshold = 1e-8;
inline constexpr int kAstSeriesMaxTerms = 10'000;

// tanh-sinh quadrature of (1 - z x)^(-d) f(x) over (a, b).
// Throws ConvergenceError if the error estimate exceeds 1e-8.
AstValue ast_quadrature(const AstQuery& query);

// sum_m (d)_m / m! z^m E[X^m], truncated once the remaining terms are
// bounded below tol * |sum|. est_error is a bound on the truncated tail plus
// accumulated rounding.
AstValue ast_moment_series(const AstQuery& query, double tol = 1e-15);

// AST of order r of beta(r + 1/2, r + 1/2) on [a, b]:
//   [4 / (2 - (a+b) z + 2 sqrt(1 - (a+b) z + a b z^2))]^r
double ast_closed_symmetric(double r, double a, double b, double z);

// AST of order r of beta(s, r - s) on [a, b]: (1 - z a)^(s-r) (1 - z b)^(-s).
double ast_closed_general(double s, double r, double a, double b, double z);

// Shape tolerance used when recognizing closed-form patterns.
inline constexpr double kShapeMatchTolerance = 1e-12;

// Closed form for the query when its (p, q, d) fit either pattern above.
std::optional<AstValue> ast_closed_form(const AstQuery& query);

// Generalized Stieltjes transform S[H; d](1/z) = z^d AST[H; d](z).
double gst_from_ast(double ast_value, double z, double order);
// Inverse of gst_from_ast: AST[H; d](z) = z^(-d) S[H; d](1/z).
double ast_from_gst(double gst_value, double z, double order);

// 21 equally spaced points spanning [-0.9/M, 0.9/M].
std::vector<double> default_z_grid(double max_abs, int points = 21);

}  // namespace rwa
