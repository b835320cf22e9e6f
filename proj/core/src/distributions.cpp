// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rwa/special_functions.hpp"

namespace rwa {
namespace {

// (e) * ln(d), with the convention 0 * ln(0) = 0 for unit shapes.
double power_log(double exponent, double distance) {
  return exponent == 0.0 ? 0.0 : exponent * std::log(distance);
}

}  // namespace

IntervalBeta::IntervalBeta(double p, double q, double lower, double upper)
    : p_(p), q_(q), lower_(lower), upper_(upper), log_norm_(0.0) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw std::domain_error("IntervalBeta: shape parameters must be positive and finite");
  }
  if (!(lower < upper) || !std::isfinite(lower) || !std::isfinite(upper)) {
    throw std::domain_error("IntervalBeta: support requires finite a < b");
  }
  log_norm_ = log_beta_fn(p, q) + (p + q - 1.0) * std::log(upper - lower);
}

double IntervalBeta::max_abs() const { return std::max(std::abs(lower_), std::abs(upper_)); }

double IntervalBeta::log_pdf_from_distances(double from_lower, double to_upper) const {
  return power_log(p_ - 1.0, from_lower) + power_log(q_ - 1.0, to_upper) - log_norm_;
}

double IntervalBeta::pdf_from_distances(double from_lower, double to_upper) const {
  return std::exp(log_pdf_from_distances(from_lower, to_upper));
}

double IntervalBeta::pdf(double x) const {
  if (x < lower_ || x > upper_) return 0.0;
  if ((x == lower_ && p_ < 1.0) || (x == upper_ && q_ < 1.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return pdf_from_distances(x - lower_, upper_ - x);
}

double IntervalBeta::cdf(double x) const {
  if (x <= lower_) return 0.0;
  if (x >= upper_) return 1.0;
  const double t = std::clamp((x - lower_) / width(), 0.0, 1.0);
  return reg_inc_beta(t, p_, q_);
}

double IntervalBeta::raw_moment(unsigned m) const {
  // E[T^j] for the standard beta, built incrementally.
  double sum = 0.0;
  double t_moment = 1.0;
  double binom = 1.0;
  const double w = width();
  for (unsigned j = 0; j <= m; ++j) {
    if (j > 0) {
      t_moment *= (p_ + j - 1.0) / (p_ + q_ + j - 1.0);
      binom *= static_cast<double>(m - j + 1) / static_cast<double>(j);
    }
    sum += binom * std::pow(lower_, static_cast<double>(m - j)) * std::pow(w, static_cast<double>(j)) *
           t_moment;
  }
  return sum;
}

std::vector<double> IntervalBeta::moment_sequence(std::size_t count) const {
  std::vector<double> mu(count);
  if (count == 0) return mu;
  mu[0] = 1.0;
  if (count == 1) return mu;
  mu[1] = mean();
  const double ab = lower_ * upper_;
  for (std::size_t m = 1; m + 1 < count; ++m) {
    const double dm = static_cast<double>(m);
    mu[m + 1] = (((dm + p_) * upper_ + (dm + q_) * lower_) * mu[m] - dm * ab * mu[m - 1]) /
                (dm + p_ + q_);
  }
  return mu;
}

double IntervalBeta::mean() const { return lower_ + width() * p_ / (p_ + q_); }

double IntervalBeta::variance() const {
  const double s = p_ + q_;
  return width() * width() * p_ * q_ / (s * s * (s + 1.0));
}

double IntervalBeta::sample(CounterRng& rng) const {
  const double log_x = log_gamma_variate(p_, rng);
  const double log_y = log_gamma_variate(q_, rng);
  // X / (X + Y) without forming X or Y.
  const double t = 1.0 / (1.0 + std::exp(log_y - log_x));
  return std::clamp(lower_ + width() * t, lower_, upper_);
}

std::vector<double> sample(const IntervalBeta& dist, CounterRng& rng, std::size_t count) {
  std::vector<double> out(count);
  for (auto& x : out) x = dist.sample(rng);
  return out;
}

IntervalBeta ps_to_beta(const PowerSemicircleParams& params) {
  if (!(params.theta > -1.5)) throw std::domain_error("ps_to_beta: theta must exceed -3/2");
  if (!(params.sigma > 0.0)) throw std::domain_error("ps_to_beta: sigma must be positive");
  const double shape = params.theta + 1.5;
  return IntervalBeta(shape, shape, -params.sigma, params.sigma);
}

IntervalBeta uniform_law(double lower, double upper) { return IntervalBeta(1.0, 1.0, lower, upper); }

IntervalBeta arcsine_law(double lower, double upper) { return IntervalBeta(0.5, 0.5, lower, upper); }

IntervalBeta wigner_law(double sigma) { return ps_to_beta({0.0, sigma}); }

CompositionSpec::CompositionSpec(std::uint32_t n, std::vector<std::uint32_t> cuts)
    : n_(n), cuts_(std::move(cuts)) {
  if (n_ == 0) throw std::domain_error("CompositionSpec: n must be positive");
  std::uint32_t previous = 0;
  for (const auto c : cuts_) {
    if (c <= previous || c >= n_) {
      throw std::domain_error("CompositionSpec: cuts must satisfy 0 < n_1 < ... < n_{k-1} < n");
    }
    previous = c;
  }
}

CompositionSpec CompositionSpec::all_cuts(std::uint32_t n) {
  if (n == 0) throw std::domain_error("CompositionSpec: n must be positive");
  std::vector<std::uint32_t> cuts;
  for (std::uint32_t i = 1; i < n; ++i) cuts.push_back(i);
  return CompositionSpec(n, std::move(cuts));
}

CompositionSpec CompositionSpec::from_block_sizes(std::span<const std::uint32_t> sizes) {
  if (sizes.empty()) throw std::domain_error("CompositionSpec: need at least one block");
  std::vector<std::uint32_t> cuts;
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw std::domain_error("CompositionSpec: block sizes must be positive");
    total += sizes[i];
    if (i + 1 < sizes.size()) cuts.push_back(total);
  }
  return CompositionSpec(total, std::move(cuts));
}

std::vector<std::uint32_t> CompositionSpec::block_sizes() const {
  std::vector<std::uint32_t> r;
  r.reserve(k());
  std::uint32_t previous = 0;
  for (const auto c : cuts_) {
    r.push_back(c - previous);
    previous = c;
  }
  r.push_back(n_ - previous);
  return r;
}

bool WeightVector::valid() const {
  if (weights.empty()) return false;
  double sum = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0)) return false;
    sum += w;
  }
  return std::abs(sum - 1.0) <= 1e-12;
}

WeightVector dirichlet_sample(std::span<const double> r, CounterRng& rng) {
  if (r.empty()) throw std::domain_error("dirichlet_sample: empty parameter vector");
  for (const double rj : r) {
    if (!(rj > 0.0)) throw std::domain_error("dirichlet_sample: parameters must be positive");
  }
  WeightVector v;
  v.weights.resize(r.size());
  if (r.size() == 1) {
    v.weights[0] = 1.0;
    return v;
  }
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < r.size(); ++j) {
    v.weights[j] = log_gamma_variate(r[j], rng);
    top = std::max(top, v.weights[j]);
  }
  double sum = 0.0;
  for (auto& w : v.weights) {
    w = std::exp(w - top);
    sum += w;
  }
  for (auto& w : v.weights) w /= sum;
  return v;
}

WeightVector order_statistic_weights(const CompositionSpec& spec, CounterRng& rng) {
  std::vector<double> u(spec.n() - 1);
  for (auto& x : u) x = rng.uniform();
  std::sort(u.begin(), u.end());

  WeightVector v;
  v.weights.reserve(spec.k());
  double previous = 0.0;
  for (const auto c : spec.cuts()) {
    const double current = u[c - 1];  // U_(c)
    v.weights.push_back(current - previous);
    previous = current;
  }
  v.weights.push_back(1.0 - previous);
  return v;
}

}  // namespace rwa
