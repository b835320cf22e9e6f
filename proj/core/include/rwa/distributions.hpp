// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rwa/random.hpp"

namespace rwa {

/*!
 * Beta law with shapes (p, q) rescaled to the interval [a, b]:
 *
 *   f(x) = (x-a)^(p-1) (b-x)^(q-1) / (B(p,q) (b-a)^(p+q-1)),  a < x < b.
 *
 * Immutable after construction; the constructor throws std::domain_error
 * unless p > 0, q > 0 and a < b.
 */
class IntervalBeta {
 public:
  IntervalBeta(double p, double q, double lower = 0.0, double upper = 1.0);

  double p() const { return p_; }
  double q() const { return q_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  double width() const { return upper_ - lower_; }
  // max(|a|, |b|); the transform domain is |z| * max_abs() < 1.
  double max_abs() const;

  // Density; zero outside (a, b). At an endpoint where the matching shape is
  // below one the density is +infinity.
  double pdf(double x) const;

  // Density from the distances x - a and b - x, for quadrature nodes that
  // sit closer to an endpoint than x can resolve.
  double pdf_from_distances(double from_lower, double to_upper) const;
  double log_pdf_from_distances(double from_lower, double to_upper) const;

  double cdf(double x) const;

  // E[X^m] by binomial expansion of (a + (b-a) T)^m, T ~ beta(p, q).
  double raw_moment(unsigned m) const;

  // E[X^0], ..., E[X^(count-1)] from the three-term recurrence
  //   (m+p+q) mu_{m+1} = ((m+p) b + (m+q) a) mu_m - m a b mu_{m-1},
  // which keeps absolute error near eps * max_abs()^m for large m where
  // the binomial expansion cancels catastrophically.
  std::vector<double> moment_sequence(std::size_t count) const;

  double mean() const;
  double variance() const;

  double sample(CounterRng& rng) const;

  friend bool operator==(const IntervalBeta&, const IntervalBeta&) = default;

 private:
  double p_;
  double q_;
  double lower_;
  double upper_;
  double log_norm_;  // ln B(p,q) + (p+q-1) ln(b-a)
};

// `count` i.i.d. draws. Deterministic given the generator state.
std::vector<double> sample(const IntervalBeta& dist, CounterRng& rng, std::size_t count);

/// PS(theta, sigma) on (-sigma, sigma).
struct PowerSemicircleParams {
  double theta;
  double sigma;
};

// PS(theta, sigma) = beta(theta + 3/2, theta + 3/2) on [-sigma, sigma].
IntervalBeta ps_to_beta(const PowerSemicircleParams& params);

IntervalBeta uniform_law(double lower, double upper);
IntervalBeta arcsine_law(double lower, double upper);
IntervalBeta wigner_law(double sigma);

/*!
 * Sample size n with selected order-statistic indices 0 < n_1 < ... < n_{k-1} < n.
 * Block sizes are r_j = n_j - n_{j-1} with n_0 = 0 and n_k = n.
 */
class CompositionSpec {
 public:
  CompositionSpec(std::uint32_t n, std::vector<std::uint32_t> cuts);

  // Every order statistic selected: k = n, all r_j = 1.
  static CompositionSpec all_cuts(std::uint32_t n);
  // Cuts at the partial sums of the given positive block sizes.
  static CompositionSpec from_block_sizes(std::span<const std::uint32_t> sizes);

  std::uint32_t n() const { return n_; }
  std::span<const std::uint32_t> cuts() const { return cuts_; }
  std::size_t k() const { return cuts_.size() + 1; }
  std::vector<std::uint32_t> block_sizes() const;

  friend bool operator==(const CompositionSpec&, const CompositionSpec&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> cuts_;
};

/// Realized random weights V_1..V_k on the simplex.
struct WeightVector {
  std::vector<double> weights;

  // Nonnegative entries summing to one within 1e-12.
  bool valid() const;
};

// One draw from Dir(r) by normalized gamma variates.
WeightVector dirichlet_sample(std::span<const double> r, CounterRng& rng);

// Spacings of n-1 sorted uniforms at the selected cuts.
WeightVector order_statistic_weights(const CompositionSpec& spec, CounterRng& rng);

}  // namespace rwa
