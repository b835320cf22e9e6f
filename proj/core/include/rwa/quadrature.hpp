// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace rwa::quad {

struct Options {
  double abs_tol = 1e-11;
  double rel_tol = 0.0;
  int min_level = 3;
  int max_level = 12;
};

struct Result {
  double value = 0.0;
  // |I_L - I_{L-1}| at the final level L.
  double error_estimate = 0.0;
  int level = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

// One abscissa of the tanh-sinh rule on (-1, 1) for u >= 0.
// `complement` is 1 - abscissa computed without cancellation, so that
// integrands with endpoint singularities see accurate endpoint distances.
struct Node {
  double abscissa;
  double complement;
  double weight;
};

// Node tables for levels 0..kMaxLevel. Level 0 has step 1, level L adds the
// odd multiples of 2^-L. Built once on first use and immutable afterwards.
class TanhSinhTable {
 public:
  static constexpr int kMaxLevel = 12;

  static const TanhSinhTable& instance();

  std::span<const Node> level(int l) const { return levels_.at(static_cast<std::size_t>(l)); }

 private:
  TanhSinhTable();

  std::vector<std::vector<Node>> levels_;
};

/*!
 * Double-exponential quadrature of f over the open interval (lower, upper).
 *
 * The integrand is called as f(x, x - lower, upper - x); the two distances
 * are exact to working precision even when x rounds onto an endpoint.
 * Endpoints themselves are never evaluated. Levels are refined until
 * |I_L - I_{L-1}| <= max(abs_tol, rel_tol * |I_L|) with L >= min_level.
 */
template <class F>
Result integrate(F&& f, double lower, double upper, const Options& opts = {}) {
  const auto& table = TanhSinhTable::instance();
  const double mid = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);
  const int max_level = opts.max_level < TanhSinhTable::kMaxLevel ? opts.max_level
                                                                   : TanhSinhTable::kMaxLevel;

  Result result;
  double sum = 0.0;
  double previous = 0.0;
  double h = 1.0;

  for (int l = 0; l <= max_level; ++l) {
    for (const Node& node : table.level(l)) {
      const double near = half * node.complement;
      const double far = half * (2.0 - node.complement);
      const double offset = half * node.abscissa;
      if (node.abscissa == 0.0) {
        sum += node.weight * f(mid, half, half);
        ++result.evaluations;
        continue;
      }
      sum += node.weight * (f(mid + offset, far, near) + f(mid - offset, near, far));
      result.evaluations += 2;
    }
    if (l > 0) h *= 0.5;
    const double current = h * half * sum;
    result.value = current;
    result.level = l;
    if (l > 0) {
      result.error_estimate = std::abs(current - previous);
      const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(current));
      if (l >= opts.min_level && result.error_estimate <= tol) {
        result.converged = true;
        return result;
      }
    }
    previous = current;
  }
  return result;
}

}  // namespace rwa::quad
