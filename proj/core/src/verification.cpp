// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/verification.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "rwa/transforms.hpp"

namespace rwa {

bool VerificationReport::moments_passed() const {
  return std::all_of(moment_errors.begin(), moment_errors.end(), [&](const MomentError& e) {
    return e.abs_error <= moment_sigma * e.std_error;
  });
}

bool VerificationReport::evaluate() const {
  return failure_reason.empty() && identity_passed() && ks_passed() && moments_passed();
}

double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw std::invalid_argument("ks_statistic: no samples");
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

double ks_critical_value(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks_critical_value: alpha in (0,1)");
  if (n == 0) throw std::domain_error("ks_critical_value: n must be positive");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_two_sample_critical(double alpha, std::size_t n, std::size_t m) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks_two_sample_critical: alpha in (0,1)");
  if (n == 0 || m == 0) throw std::domain_error("ks_two_sample_critical: empty sample");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return std::sqrt(std::log(2.0 / alpha) / 2.0) * std::sqrt((dn + dm) / (dn * dm));
}

std::vector<MomentError> moment_compare(std::span<const double> samples, const IntervalBeta& dist,
                                        unsigned max_order) {
  std::vector<MomentError> out;
  if (max_order == 0) return out;
  if (samples.size() < 2) throw std::invalid_argument("moment_compare: need at least two samples");
  const double n = static_cast<double>(samples.size());
  for (unsigned m = 1; m <= max_order; ++m) {
    const double dm = static_cast<double>(m);
    double mean = 0.0;
    for (const double x : samples) mean += std::pow(x, dm);
    mean /= n;
    double ss = 0.0;
    for (const double x : samples) {
      const double dev = std::pow(x, dm) - mean;
      ss += dev * dev;
    }
    const double sd = std::sqrt(ss / (n - 1.0));
    out.push_back({m, std::abs(mean - dist.raw_moment(m)), sd / std::sqrt(n)});
  }
  return out;
}

double identity_max_error(const RwaProblem& problem, const IntervalBeta& law,
                          std::span<const double> z_grid) {
  const double order = problem.total_order();
  double worst = 0.0;
  for (const double z : z_grid) {
    const double lhs = ast_quadrature(AstQuery(law, order, z)).value;
    const double rhs = ast_product(problem, z);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

VerificationReport verify_theorem(const RwaProblem& problem, WeightPath path,
                                  const VerificationConfig& config, const CounterRng& root,
                                  std::optional<IntervalBeta> expected, std::string check_id) {
  VerificationReport report;
  report.check_id = std::move(check_id);
  report.z_tolerance = config.z_tolerance;
  report.moment_sigma = config.moment_sigma;
  report.sample_count = config.sample_count;
  report.seed = {root.seed(), root.stream()};
  report.ks_critical = ks_critical_value(config.alpha, config.sample_count);

  if (!expected) expected = predict_distribution(problem).result;
  if (!expected) {
    report.failure_reason = "no closed-form law applies and none was supplied";
    report.passed = false;
    return report;
  }

  try {
    const auto [lo, hi] = problem.hull();
    const double bound = std::max({std::abs(lo), std::abs(hi), expected->max_abs()});
    const auto grid = default_z_grid(bound);
    report.z_grid_max_abs_err = identity_max_error(problem, *expected, grid);
    report.identity_checked = true;

    auto samples = sample_rwa(problem, path, root, config.sample_count, config.sampling);
    std::sort(samples.begin(), samples.end());
    const IntervalBeta law = *expected;
    report.ks_statistic = ks_statistic(samples, [&law](double x) { return law.cdf(x); });
    report.moment_errors = moment_compare(samples, law, config.max_moment_order);
  } catch (const std::exception& e) {
    report.failure_reason = e.what();
  }
  report.passed = report.evaluate();
  return report;
}

VerificationReport verify_weight_paths(std::span<const std::uint32_t> block_sizes,
                                       const VerificationConfig& config, const CounterRng& root,
                                       std::string check_id) {
  VerificationReport report;
  report.check_id = std::move(check_id);
  report.sample_count = config.sample_count;
  report.seed = {root.seed(), root.stream()};
  report.ks_critical = ks_two_sample_critical(config.alpha, config.sample_count, config.sample_count);
  try {
    const auto spec = CompositionSpec::from_block_sizes(block_sizes);
    const std::vector<double> r(block_sizes.begin(), block_sizes.end());
    // Distinct child streams for the two constructions.
    CounterRng order_rng = root.split(0);
    CounterRng dirichlet_rng = root.split(1);
    std::vector<double> from_order(config.sample_count);
    std::vector<double> from_dirichlet(config.sample_count);
    for (std::size_t i = 0; i < config.sample_count; ++i) {
      from_order[i] = order_statistic_weights(spec, order_rng).weights.front();
      from_dirichlet[i] = dirichlet_sample(r, dirichlet_rng).weights.front();
    }
    std::sort(from_order.begin(), from_order.end());
    std::sort(from_dirichlet.begin(), from_dirichlet.end());
    report.ks_statistic = ks_two_sample(from_order, from_dirichlet);
  } catch (const std::exception& e) {
    report.failure_reason = e.what();
  }
  report.passed = report.evaluate();
  return report;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::known_discrepancy:
      return "KNOWN-DISCREPANCY";
  }
  return "FAIL";
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<ReportLine> report_lines(const VerificationReport& r) {
  auto verdict = [](bool ok) { return ok ? Verdict::pass : Verdict::fail; };
  std::vector<ReportLine> lines;
  if (r.identity_checked) {
    lines.push_back({r.check_id + "/identity", format_double(r.z_grid_max_abs_err),
                     format_double(r.z_tolerance), verdict(r.identity_passed())});
  }
  if (r.formula) {
    const Verdict v = r.formula->agrees()            ? Verdict::pass
                      : r.formula->known_discrepancy ? Verdict::known_discrepancy
                                                     : Verdict::fail;
    lines.push_back({r.check_id + "/formula", format_double(r.formula->max_abs_err),
                     format_double(r.formula->tolerance), v});
  }
  if (r.failure_reason.empty()) {
    lines.push_back({r.check_id + "/ks", format_double(r.ks_statistic), format_double(r.ks_critical),
                     verdict(r.ks_passed())});
    for (const auto& m : r.moment_errors) {
      lines.push_back({r.check_id + "/moment" + std::to_string(m.order), format_double(m.abs_error),
                       format_double(r.moment_sigma * m.std_error),
                       verdict(m.abs_error <= r.moment_sigma * m.std_error)});
    }
  } else {
    lines.push_back({r.check_id + "/error", r.failure_reason, "-", Verdict::fail});
  }
  lines.push_back({r.check_id, format_double(r.ks_statistic), format_double(r.ks_critical),
                   verdict(r.passed)});
  return lines;
}

std::string format_report_text(std::span<const VerificationReport> reports) {
  std::string out;
  for (const auto& report : reports) {
    for (const auto& line : report_lines(report)) {
      out += line.id + '\t' + line.statistic + '\t' + line.threshold + '\t' +
             std::string(to_string(line.verdict)) + '\n';
    }
  }
  return out;
}

std::string format_report_csv(std::span<const VerificationReport> reports) {
  std::string out = "check_id,statistic,threshold,verdict\n";
  auto quoted = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  };
  for (const auto& report : reports) {
    for (const auto& line : report_lines(report)) {
      out += quoted(line.id) + ',' + quoted(line.statistic) + ',' + quoted(line.threshold) + ',' +
             std::string(to_string(line.verdict)) + '\n';
    }
  }
  return out;
}

}  // namespace rwa
