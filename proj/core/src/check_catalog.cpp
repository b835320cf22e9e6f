// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/check_catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "rwa/transforms.hpp"

namespace rwa {
namespace {

using Params = std::map<std::string, std::string, std::less<>>;

[[noreturn]] void bad(std::string_view check, const std::string& why) {
  throw std::invalid_argument("check '" + std::string(check) + "': " + why);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

double to_double(std::string_view check, std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    bad(check, "'" + std::string(text) + "' is not a number");
  }
  return value;
}

std::vector<double> to_list(std::string_view check, std::string_view text) {
  std::vector<double> out;
  for (const auto part : split(text, ',')) out.push_back(to_double(check, part));
  return out;
}

std::uint32_t to_count(std::string_view check, std::string_view text) {
  const double v = to_double(check, text);
  if (v < 1.0 || std::floor(v) != v || v > 1e4) bad(check, "'" + std::string(text) + "' is not a positive integer");
  return static_cast<std::uint32_t>(v);
}

struct Plan {
  std::string id;
  // Theorem-style check.
  std::optional<RwaProblem> problem;
  WeightPath path = WeightPath::dirichlet;
  std::optional<IntervalBeta> expected;
  // Closed expression compared on the z-grid against `formula_target`.
  std::function<double(double)> formula;
  std::function<double(double)> formula_target;
  bool formula_known_discrepancy = false;
  // Weight-path check.
  std::vector<std::uint32_t> weight_blocks;
};

class PlanBuilder {
 public:
  explicit PlanBuilder(std::string_view check) : check_(check) {
    const auto parts = split(check, ':');
    name_ = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      if (eq == std::string_view::npos || eq == 0) bad(check, "expected key=value, got '" + std::string(parts[i]) + "'");
      const std::string key(parts[i].substr(0, eq));
      if (params_.count(key) != 0) bad(check, "duplicate key '" + key + "'");
      params_.emplace(key, std::string(parts[i].substr(eq + 1)));
    }
  }

  Plan build() {
    try {
      return dispatch();
    } catch (const std::domain_error& e) {
      bad(check_, e.what());
    }
  }

 private:
  Plan dispatch() {
    if (name_ == "thm3.1") return thm31();
    if (name_ == "thm3.2") return thm32();
    if (name_ == "cor3.1") return cor31();
    if (name_ == "cor3.2") return cor32();
    if (name_ == "example4.1") return example41();
    if (name_ == "example4.2") return example42();
    if (name_ == "example4.3") return example43();
    if (name_ == "example4.4") return example44();
    if (name_ == "weights") return weights();
    bad(check_, "unknown check name '" + std::string(name_) + "'");
  }

  void allow(std::initializer_list<std::string_view> keys) {
    for (const auto& [key, value] : params_) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) bad(check_, "unknown key '" + key + "'");
    }
  }

  std::optional<std::string_view> get(std::string_view key) const {
    const auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    return std::string_view(it->second);
  }

  std::string_view require(std::string_view key) const {
    const auto v = get(key);
    if (!v) bad(check_, "missing key '" + std::string(key) + "'");
    return *v;
  }

  std::pair<double, double> support(double a, double b) const {
    if (const auto v = get("support")) {
      const auto list = to_list(check_, *v);
      if (list.size() != 2 || !(list[0] < list[1])) bad(check_, "support must be 'a,b' with a < b");
      return {list[0], list[1]};
    }
    return {a, b};
  }

  double sigma() const {
    const double s = get("sigma") ? to_double(check_, *get("sigma")) : 1.0;
    if (!(s > 0.0)) bad(check_, "sigma must be positive");
    return s;
  }

  WeightPath path(std::span<const double> r, WeightPath fallback_integer) const {
    if (const auto v = get("path")) {
      if (*v == "order") return WeightPath::order_statistics;
      if (*v == "dirichlet") return WeightPath::dirichlet;
      bad(check_, "path must be 'order' or 'dirichlet'");
    }
    const bool integer = std::all_of(r.begin(), r.end(), [](double x) { return std::floor(x) == x; });
    return integer ? fallback_integer : WeightPath::dirichlet;
  }

  std::vector<double> block_sizes() const {
    auto r = to_list(check_, require("r"));
    for (const double x : r) {
      if (!(x > 0.0)) bad(check_, "block sizes must be positive");
    }
    return r;
  }

  Plan theorem(std::vector<double> r, std::vector<IntervalBeta> inputs, WeightPath p) {
    Plan plan;
    plan.id = std::string(check_);
    plan.path = p;
    plan.problem = RwaProblem::from_dirichlet(std::move(r), std::move(inputs));
    if (plan.path == WeightPath::order_statistics && !plan.problem->composition()) {
      bad(check_, "order-statistics path needs integer block sizes");
    }
    return plan;
  }

  Plan thm31() {
    allow({"r", "support", "path"});
    const auto r = block_sizes();
    const auto [a, b] = support(0.0, 1.0);
    std::vector<IntervalBeta> inputs;
    for (const double ri : r) inputs.emplace_back(ri + 0.5, ri + 0.5, a, b);
    return theorem(r, inputs, path(r, WeightPath::order_statistics));
  }

  Plan thm32() {
    allow({"r", "s", "support", "path"});
    const auto r = block_sizes();
    const auto s = to_list(check_, require("s"));
    if (s.size() != r.size()) bad(check_, "r and s must have the same length");
    const auto [a, b] = support(0.0, 1.0);
    std::vector<IntervalBeta> inputs;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!(s[i] > 0.0 && s[i] < r[i])) bad(check_, "need 0 < s_i < r_i");
      inputs.emplace_back(s[i], r[i] - s[i], a, b);
    }
    return theorem(r, inputs, path(r, WeightPath::order_statistics));
  }

  Plan cor31() {
    allow({"r", "support", "path"});
    const auto r = block_sizes();
    const auto [a, b] = support(0.0, 1.0);
    std::vector<IntervalBeta> inputs;
    for (const double ri : r) inputs.emplace_back(0.5 * ri, 0.5 * ri, a, b);
    return theorem(r, inputs, path(r, WeightPath::order_statistics));
  }

  Plan cor32() {
    allow({"n", "sigma"});
    const auto n = to_count(check_, require("n"));
    const double s = sigma();
    const auto spec = CompositionSpec::all_cuts(n);
    const auto sizes = spec.block_sizes();
    std::vector<double> r(sizes.begin(), sizes.end());
    std::vector<IntervalBeta> inputs(n, arcsine_law(-s, s));
    return theorem(r, inputs, WeightPath::order_statistics);
  }

  // S = R X_1 + (1-R) X_2, R ~ beta(1, m-1), i.e. Dir(1, m-1) weights.
  Plan two_block(double first_p, double first_q, double a, double b, int m) {
    std::vector<double> r = {1.0, m - 1.0};
    std::vector<IntervalBeta> inputs = {IntervalBeta(first_p, first_q, a, b),
                                        IntervalBeta(m - 0.5, m - 0.5, a, b)};
    return theorem(r, inputs, WeightPath::order_statistics);
  }

  int example_m() const {
    const auto m = get("m") ? to_count(check_, *get("m")) : 3U;
    if (m < 2) bad(check_, "m must be at least 2");
    return static_cast<int>(m);
  }

  Plan example41() {
    allow({"m", "support"});
    const int m = example_m();
    const auto [a, b] = support(-1.0, 1.0);
    Plan plan = two_block(0.5, 0.5, a, b, m);
    plan.expected = IntervalBeta(m - 0.5, m - 0.5, a, b);
    const RwaProblem problem = *plan.problem;
    plan.formula = [m, a = a, b = b](double z) { return example_ast_4_1(m, a, b, z); };
    plan.formula_target = [problem](double z) { return ast_product(problem, z); };
    return plan;
  }

  Plan example42() {
    allow({"m", "support"});
    const int m = get("m") ? example_m() : 2;
    const auto [a, b] = support(0.0, 1.0);
    Plan plan = two_block(1.5, 0.5, a, b, m);
    const IntervalBeta law(m + 0.5, m - 0.5, a, b);
    plan.expected = law;
    plan.formula = [m, a = a, b = b](double z) { return example_ast_4_2(m, a, b, z); };
    plan.formula_target = [law, m](double z) { return ast_quadrature(AstQuery(law, m, z)).value; };
    plan.formula_known_discrepancy = true;
    return plan;
  }

  Plan example43() {
    allow({"k", "support", "path"});
    const auto k = get("k") ? to_count(check_, *get("k")) : 3U;
    const auto [a, b] = support(-1.0, 2.0);
    std::vector<double> r(k, 2.0);
    std::vector<IntervalBeta> inputs(k, uniform_law(a, b));
    Plan plan = theorem(r, inputs, path(r, WeightPath::dirichlet));
    plan.expected = IntervalBeta(k, k, a, b);
    return plan;
  }

  Plan example44() {
    allow({"k", "sigma", "path"});
    const auto k = get("k") ? to_count(check_, *get("k")) : 2U;
    const double s = sigma();
    std::vector<double> r(k, 3.0);
    std::vector<IntervalBeta> inputs(k, wigner_law(s));
    Plan plan = theorem(r, inputs, path(r, WeightPath::dirichlet));
    plan.expected = IntervalBeta(1.5 * k, 1.5 * k, -s, s);
    return plan;
  }

  Plan weights() {
    allow({"r"});
    Plan plan;
    plan.id = std::string(check_);
    for (const auto part : split(require("r"), ',')) plan.weight_blocks.push_back(to_count(check_, part));
    CompositionSpec::from_block_sizes(plan.weight_blocks);
    return plan;
  }

  std::string_view check_;
  std::string_view name_;
  Params params_;
};

VerificationReport run_plan(const Plan& plan, const VerificationConfig& config,
                            std::uint64_t master_seed) {
  const CounterRng root(master_seed, stream_for_check(plan.id));
  if (!plan.problem) return verify_weight_paths(plan.weight_blocks, config, root, plan.id);

  VerificationReport report =
      verify_theorem(*plan.problem, plan.path, config, root, plan.expected, plan.id);
  if (plan.formula) {
    FormulaCheck fc;
    fc.tolerance = config.z_tolerance;
    fc.known_discrepancy = plan.formula_known_discrepancy;
    try {
      const auto [lo, hi] = plan.problem->hull();
      for (const double z : default_z_grid(std::max(std::abs(lo), std::abs(hi)))) {
        fc.max_abs_err = std::max(fc.max_abs_err, std::abs(plan.formula(z) - plan.formula_target(z)));
      }
    } catch (const std::exception& e) {
      report.failure_reason = e.what();
    }
    report.formula = fc;
    // A formula that is expected to agree and does not fails the check.
    report.passed = report.evaluate() && (fc.agrees() || fc.known_discrepancy);
  }
  return report;
}

}  // namespace

std::vector<std::string> default_check_suite() {
  return {
      "thm3.1:r=1,2",
      "thm3.1:r=1,1,2:support=-1,1",
      "thm3.2:r=1,2,3:s=0.5,1,1.5:path=dirichlet",
      "thm3.2:r=2,3:s=0.5,2:support=-1,1",
      "cor3.1:r=2,2",
      "cor3.2:n=2",
      "cor3.2:n=3",
      "cor3.2:n=4",
      "cor3.2:n=5",
      "example4.1:m=3",
      "example4.2:m=2",
      "example4.2:m=3",
      "example4.3:k=3",
      "example4.4:k=2",
      "weights:r=1,2",
  };
}

std::uint32_t stream_for_check(std::string_view check_id) {
  std::uint32_t h = 2166136261U;
  for (const unsigned char c : check_id) {
    h ^= c;
    h *= 16777619U;
  }
  return h;
}

VerificationReport run_check(std::string_view check, const VerificationConfig& config,
                             std::uint64_t master_seed) {
  return run_plan(PlanBuilder(check).build(), config, master_seed);
}

std::vector<VerificationReport> run_checks(std::span<const std::string> checks,
                                           const VerificationConfig& config,
                                           std::uint64_t master_seed, unsigned workers) {
  // Parse everything first so a bad name fails before any work starts.
  std::vector<Plan> plans;
  std::set<std::string> seen;
  for (const auto& c : checks) {
    if (!seen.insert(c).second) continue;
    plans.push_back(PlanBuilder(c).build());
  }

  std::vector<VerificationReport> reports(plans.size());
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, plans.size()));

  VerificationConfig per_check = config;
  if (workers > 1) per_check.sampling.threads = 1;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plans.size(); i = next++) {
      reports[i] = run_plan(plans[i], per_check, master_seed);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.check_id < b.check_id; });
  return reports;
}

}  // namespace rwa
