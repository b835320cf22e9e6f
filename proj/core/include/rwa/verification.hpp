// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rwa/distributions.hpp"
#include "rwa/rwa_engine.hpp"

namespace rwa {

struct VerificationConfig {
  std::size_t sample_count = 100'000;
  double alpha = 1e-3;
  double z_tolerance = 1e-8;
  unsigned max_moment_order = 4;
  // A moment passes when |error| <= moment_sigma * MC standard error.
  double moment_sigma = 5.0;
  SamplingOptions sampling;
};

struct MomentError {
  unsigned order;
  double abs_error;
  double std_error;
};

struct SeedRecord {
  std::uint64_t master_seed = 0;
  std::uint64_t stream = 0;
};

// Comparison of a closed expression against the transform it is meant to equal.
struct FormulaCheck {
  double max_abs_err = 0.0;
  double tolerance = 0.0;
  // When set, a mismatch is expected and reported rather than failed.
  bool known_discrepancy = false;

  bool agrees() const { return max_abs_err <= tolerance; }
};

struct VerificationReport {
  std::string check_id;

  bool identity_checked = false;
  double z_grid_max_abs_err = 0.0;
  double z_tolerance = 0.0;

  double ks_statistic = 0.0;
  double ks_critical = 0.0;

  std::vector<MomentError> moment_errors;
  double moment_sigma = 5.0;

  std::optional<FormulaCheck> formula;

  std::size_t sample_count = 0;
  SeedRecord seed;
  // Non-empty when a step threw; the report then counts as failed.
  std::string failure_reason;

  bool passed = false;

  bool identity_passed() const { return !identity_checked || z_grid_max_abs_err <= z_tolerance; }
  bool ks_passed() const { return ks_statistic <= ks_critical; }
  bool moments_passed() const;
  // identity AND ks AND moments AND no failure; formula checks never veto.
  bool evaluate() const;
};

// One-sample Kolmogorov-Smirnov distance of sorted samples from `cdf`:
//   D = max_i max(i/N - F(x_(i)), F(x_(i)) - (i-1)/N).
double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf);

// Asymptotic critical value sqrt(ln(2/alpha) / (2N)).
double ks_critical_value(double alpha, std::size_t n);

// Two-sample distance sup |F_a - F_b| between sorted samples.
double ks_two_sample(std::span<const double> sorted_a, std::span<const double> sorted_b);

// sqrt(ln(2/alpha) / 2) * sqrt((n + m) / (n m)).
double ks_two_sample_critical(double alpha, std::size_t n, std::size_t m);

// Per order m = 1..max_order: |mean(x^m) - E[X^m]| and the standard error
// of mean(x^m).
std::vector<MomentError> moment_compare(std::span<const double> samples, const IntervalBeta& dist,
                                        unsigned max_order);

// max over z of |ast_product(problem, z) - AST[law; sum r](z)|, the latter by quadrature.
double identity_max_error(const RwaProblem& problem, const IntervalBeta& law,
                          std::span<const double> z_grid);

/*!
 * Checks a predicted law for an RWA problem: the transform product identity on
 * the default z-grid, a KS test of sample_rwa draws and moments 1..4.
 *
 * The law comes from predict_distribution unless `expected` is supplied;
 * with neither, the report fails with a reason. `root` must be a root stream;
 * the samples use its child streams.
 */
VerificationReport verify_theorem(const RwaProblem& problem, WeightPath path,
                                  const VerificationConfig& config, const CounterRng& root,
                                  std::optional<IntervalBeta> expected = std::nullopt,
                                  std::string check_id = {});

// Two-sample KS on V_1 between order-statistic and Dirichlet weights.
VerificationReport verify_weight_paths(std::span<const std::uint32_t> block_sizes,
                                       const VerificationConfig& config, const CounterRng& root,
                                       std::string check_id = {});

enum class Verdict { pass, fail, known_discrepancy };

std::string_view to_string(Verdict verdict);

struct ReportLine {
  std::string id;
  std::string statistic;
  std::string threshold;
  Verdict verdict;
};

// Sub-check lines followed by one summary line for the whole check.
std::vector<ReportLine> report_lines(const VerificationReport& report);

// Tab-separated `id statistic threshold verdict`, one line each.
std::string format_report_text(std::span<const VerificationReport> reports);
// Same content as CSV with a header row.
std::string format_report_csv(std::span<const VerificationReport> reports);

// Round-trippable, locale-independent decimal (17 significant digits).
std::string format_double(double value);

}  // namespace rwa
