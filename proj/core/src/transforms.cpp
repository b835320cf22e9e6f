// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/transforms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rwa/errors.hpp"
#include "rwa/quadrature.hpp"

namespace rwa {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

bool in_transform_domain(double z, double a, double b) {
  return std::abs(z) * std::max(std::abs(a), std::abs(b)) < 1.0;
}

}  // namespace

AstQuery::AstQuery(IntervalBeta dist, double order, double z) : dist_(dist), order_(order), z_(z) {
  require(order > 0.0 && std::isfinite(order), "AstQuery: order d must be positive");
  require(std::isfinite(z), "AstQuery: z must be finite");
  require(std::abs(z) * dist.max_abs() < 1.0, "AstQuery: |z| * max(|a|,|b|) must be below 1");
}

std::string_view to_string(AstRoute route) {
  switch (route) {
    case AstRoute::closed_form:
      return "closed_form";
    case AstRoute::quadrature:
      return "quadrature";
    case AstRoute::moment_series:
      return "moment_series";
  }
  return "unknown";
}

AstValue ast_quadrature(const AstQuery& query) {
  const double z = query.z();
  if (z == 0.0) return {1.0, AstRoute::quadrature, 0.0};

  const IntervalBeta& dist = query.dist();
  const double d = query.order();
  const double a = dist.lower();
  const double b = dist.upper();
  const double mid = 0.5 * (a + b);
  const double base_at_a = 1.0 - z * a;
  const double base_at_b = 1.0 - z * b;

  auto integrand = [&](double x, double from_lower, double to_upper) {
    // 1 - z x measured from the nearer endpoint.
    const double base = x < mid ? base_at_a - z * from_lower : base_at_b + z * to_upper;
    return std::exp(dist.log_pdf_from_distances(from_lower, to_upper) - d * std::log(base));
  };

  quad::Options opts;
  opts.abs_tol = kAstQuadratureTolerance;
  // Rounding floor for large transform values.
  opts.rel_tol = 64 * kEps;
  const auto r = quad::integrate(integrand, a, b, opts);
  if (!r.converged && r.error_estimate > kAstQuadratureFailThreshold) {
    throw ConvergenceError("ast_quadrature: error estimate " + std::to_string(r.error_estimate) +
                           " exceeds 1e-8");
  }
  return {r.value, AstRoute::quadrature, r.error_estimate};
}

AstValue ast_moment_series(const AstQuery& query, double tol) {
  require(tol > 0.0, "ast_moment_series: tolerance must be positive");
  const IntervalBeta& dist = query.dist();
  const double d = query.order();
  const double z = query.z();
  const double x = std::abs(z) * dist.max_abs();
  const double p = dist.p();
  const double q = dist.q();
  const double a = dist.lower();
  const double b = dist.upper();

  // Moments mu_m follow the three-term recurrence of IntervalBeta::moment_sequence.
  double mu_prev = 1.0;
  double mu = dist.mean();
  double coef = d;       // (d)_m / m! at m = 1
  double z_power = z;    // z^m
  double x_power = x;    // (|z| M)^m
  double sum = 1.0;
  double rounding = kEps;  // eps * sum_m (m+1) * bound_m

  for (int m = 1; m <= kAstSeriesMaxTerms; ++m) {
    const double dm = static_cast<double>(m);
    const double bound = coef * x_power;
    sum += coef * z_power * mu;
    rounding += kEps * (dm + 1.0) * bound;

    const double ratio = x * std::max(1.0, (d + dm) / (dm + 1.0));
    if (ratio < 1.0 && bound <= tol * std::abs(sum)) {
      const double tail = bound * ratio / (1.0 - ratio);
      return {sum, AstRoute::moment_series, tail + rounding};
    }

    const double mu_next = (((dm + p) * b + (dm + q) * a) * mu - dm * a * b * mu_prev) / (dm + p + q);
    mu_prev = mu;
    mu = mu_next;
    coef *= (d + dm) / (dm + 1.0);
    z_power *= z;
    x_power *= x;
  }
  throw ConvergenceError("ast_moment_series: no convergence within " +
                         std::to_string(kAstSeriesMaxTerms) + " terms");
}

double ast_closed_symmetric(double r, double a, double b, double z) {
  require(r > 0.0, "ast_closed_symmetric: r must be positive");
  require(a < b, "ast_closed_symmetric: requires a < b");
  require(in_transform_domain(z, a, b), "ast_closed_symmetric: z outside the transform domain");
  const double disc = 1.0 - (a + b) * z + a * b * z * z;
  require(disc >= 0.0, "ast_closed_symmetric: negative square-root argument");
  const double denom = 2.0 - (a + b) * z + 2.0 * std::sqrt(disc);
  require(denom > 0.0, "ast_closed_symmetric: non-positive denominator");
  return std::pow(4.0 / denom, r);
}

double ast_closed_general(double s, double r, double a, double b, double z) {
  require(s > 0.0 && s < r, "ast_closed_general: requires 0 < s < r");
  require(a < b, "ast_closed_general: requires a < b");
  const double base_a = 1.0 - z * a;
  const double base_b = 1.0 - z * b;
  require(base_a > 0.0 && base_b > 0.0, "ast_closed_general: 1 - z a and 1 - z b must be positive");
  return std::pow(base_a, s - r) * std::pow(base_b, -s);
}

std::optional<AstValue> ast_closed_form(const AstQuery& query) {
  const IntervalBeta& dist = query.dist();
  const double d = query.order();
  const double p = dist.p();
  const double q = dist.q();
  if (std::abs(p - q) <= kShapeMatchTolerance && std::abs(p - 0.5 - d) <= kShapeMatchTolerance) {
    return AstValue{ast_closed_symmetric(d, dist.lower(), dist.upper(), query.z()),
                    AstRoute::closed_form, 0.0};
  }
  if (std::abs(p + q - d) <= kShapeMatchTolerance) {
    return AstValue{ast_closed_general(p, d, dist.lower(), dist.upper(), query.z()),
                    AstRoute::closed_form, 0.0};
  }
  return std::nullopt;
}

namespace {

double signed_power(double z, double order) {
  require(z != 0.0, "gst/ast bridge: z must be nonzero");
  if (z < 0.0) {
    require(std::floor(order) == order, "gst/ast bridge: negative z needs an integer order");
  }
  return std::pow(z, order);
}

}  // namespace

double gst_from_ast(double ast_value, double z, double order) {
  require(order > 0.0, "gst_from_ast: order must be positive");
  return signed_power(z, order) * ast_value;
}

double ast_from_gst(double gst_value, double z, double order) {
  require(order > 0.0, "ast_from_gst: order must be positive");
  return gst_value / signed_power(z, order);
}

std::vector<double> default_z_grid(double max_abs, int points) {
  require(max_abs > 0.0, "default_z_grid: support bound must be positive");
  require(points >= 2, "default_z_grid: need at least two points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double half = 0.5 * (points - 1);
  const double limit = 0.9 / max_abs;
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = (i - half) / half * limit;
  }
  return grid;
}

}  // namespace rwa
