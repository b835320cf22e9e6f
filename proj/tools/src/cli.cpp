// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "rwa/check_catalog.hpp"
#include "rwa/errors.hpp"
#include "rwa/rwa_engine.hpp"
#include "rwa/transforms.hpp"
#include "rwa/verification.hpp"

namespace rwa::cli {
namespace {

// Distinguishes bad flags (exit 2) from failures while computing (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

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

double number(std::string_view text, std::string_view context) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(context) + ": '" + std::string(text) + "' is not a number");
  }
  return v;
}

std::vector<double> numbers(std::string_view text, std::size_t expected, std::string_view context) {
  std::vector<double> out;
  for (const auto part : split(text, ',')) out.push_back(number(part, context));
  if (out.size() != expected) {
    throw std::invalid_argument(std::string(context) + ": expected " + std::to_string(expected) +
                                " comma-separated values, got '" + std::string(text) + "'");
  }
  return out;
}

std::uint32_t whole(std::string_view text, std::string_view context) {
  std::uint32_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(context) + ": '" + std::string(text) + "' is not a non-negative integer");
  }
  return v;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw UsageError("cannot open output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct SampleArgs {
  std::string spec;
  std::vector<double> r;
  std::vector<std::string> inputs;
  std::size_t n = 1000;
  std::optional<std::uint64_t> seed;
  std::string path;
  std::string out;
};

struct AstArgs {
  std::string dist;
  double order = 0.0;
  std::vector<double> z;
  std::string out;
};

struct VerifyArgs {
  std::vector<std::string> checks;
  bool all = false;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string out;
  std::size_t samples = VerificationConfig{}.sample_count;
  double alpha = VerificationConfig{}.alpha;
  unsigned workers = 0;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  if (a.spec.empty() == a.r.empty()) throw UsageError("sample: give exactly one of --spec or --r");
  std::vector<IntervalBeta> inputs;
  for (const auto& text : a.inputs) inputs.push_back(parse_distribution(text));

  std::optional<RwaProblem> problem;
  WeightPath path = WeightPath::dirichlet;
  if (!a.spec.empty()) {
    auto spec = parse_spec(a.spec);
    if (inputs.size() != spec.k()) {
      throw UsageError("sample: spec has " + std::to_string(spec.k()) + " blocks but " +
                       std::to_string(inputs.size()) + " --input laws were given");
    }
    problem = RwaProblem::from_composition(std::move(spec), std::move(inputs));
    path = a.path == "dirichlet" ? WeightPath::dirichlet : WeightPath::order_statistics;
  } else {
    if (inputs.size() != a.r.size()) throw UsageError("sample: --r and --input counts differ");
    if (a.path == "order") throw UsageError("sample: --path order needs --spec");
    problem = RwaProblem::from_dirichlet(a.r, std::move(inputs));
  }

  const CounterRng root(a.seed.value_or(default_seed()));
  const auto draws = sample_rwa(*problem, path, root, a.n);
  Output sink(a.out, out);
  std::string text = "value\n";
  for (const double x : draws) text += format_double(x) + '\n';
  sink.get() << text;
  return kExitOk;
}

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

int cmd_ast(const AstArgs& a, std::ostream& out) {
  const IntervalBeta dist = parse_distribution(a.dist);
  const auto grid = a.z.empty() ? default_z_grid(dist.max_abs()) : a.z;
  std::vector<AstQuery> queries;
  for (const double z : grid) queries.emplace_back(dist, a.order, z);

  std::string text = "z,closed_form,quadrature,moment_series,max_pairwise_diff\n";
  for (const auto& q : queries) {
    std::optional<double> closed;
    std::optional<double> quad;
    std::optional<double> series;
    if (const auto c = ast_closed_form(q)) closed = c->value;
    try {
      quad = ast_quadrature(q).value;
    } catch (const ConvergenceError&) {
    }
    try {
      series = ast_moment_series(q).value;
    } catch (const ConvergenceError&) {
    }
    std::vector<double> present;
    for (const auto& v : {closed, quad, series}) {
      if (v) present.push_back(*v);
    }
    std::optional<double> diff;
    if (present.size() >= 2) {
      const auto [lo, hi] = std::minmax_element(present.begin(), present.end());
      diff = *hi - *lo;
    }
    text += format_double(q.z()) + ',' + optional_field(closed) + ',' + optional_field(quad) + ',' +
            optional_field(series) + ',' + optional_field(diff) + '\n';
  }
  Output sink(a.out, out);
  sink.get() << text;
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> checks = a.checks;
  if (a.all) {
    const auto suite = default_check_suite();
    checks.insert(checks.end(), suite.begin(), suite.end());
  }
  if (checks.empty()) throw UsageError("verify: give --check or --all");

  VerificationConfig config;
  config.sample_count = a.samples;
  config.alpha = a.alpha;
  const auto reports = run_checks(checks, config, a.seed.value_or(default_seed()), a.workers);

  Output sink(a.out, out);
  sink.get() << (a.format == "csv" ? format_report_csv(reports) : format_report_text(reports));
  const bool all_passed =
      std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

IntervalBeta parse_distribution(std::string_view text) {
  const auto parts = split(text, ':');
  const auto name = parts.front();
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw std::invalid_argument("distribution '" + std::string(text) + "': wrong number of ':' fields");
    }
  };
  if (name == "beta") {
    arity(2, 3);
    const auto shapes = numbers(parts[1], 2, "beta shapes");
    if (parts.size() == 2) return IntervalBeta(shapes[0], shapes[1]);
    const auto support = numbers(parts[2], 2, "beta support");
    return IntervalBeta(shapes[0], shapes[1], support[0], support[1]);
  }
  if (name == "uniform" || name == "arcsine") {
    arity(2, 2);
    const auto support = numbers(parts[1], 2, name);
    return name == "uniform" ? uniform_law(support[0], support[1]) : arcsine_law(support[0], support[1]);
  }
  if (name == "wigner") {
    arity(2, 2);
    return wigner_law(number(parts[1], "wigner sigma"));
  }
  if (name == "ps") {
    arity(2, 2);
    const auto v = numbers(parts[1], 2, "ps theta,sigma");
    return ps_to_beta({v[0], v[1]});
  }
  throw std::invalid_argument("unknown distribution '" + std::string(name) +
                              "' (expected beta, uniform, arcsine, wigner or ps)");
}

CompositionSpec parse_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::uint32_t n = whole(text.substr(0, colon), "spec n");
  if (colon == std::string_view::npos) return CompositionSpec::all_cuts(n);
  std::vector<std::uint32_t> cuts;
  const auto tail = text.substr(colon + 1);
  if (!tail.empty()) {
    for (const auto part : split(tail, ',')) cuts.push_back(whole(part, "spec cut"));
  }
  return CompositionSpec(n, std::move(cuts));
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  const std::string_view text(env);
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(kSeedEnvVar) + "='" + env + "' is not an unsigned 64-bit integer");
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomly weighted averages and additive Stieltjes transforms", "rwa"};
  app.require_subcommand(1);
  app.footer(std::string("Default seed: ") + std::to_string(kDefaultSeed) + ", overridden by " + kSeedEnvVar +
             ".\nExit status: 0 success, 1 check failure, 2 usage error.");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Draw replicates of a randomly weighted average as CSV");
  sample->add_option("--spec", sa.spec, "Composition n:c1,c2,... (bare n: all cuts)");
  sample->add_option("--r", sa.r, "Dirichlet block sizes instead of --spec")->delimiter(',');
  sample->add_option("--input", sa.inputs, "Input law per block, repeat once per block")->required();
  sample->add_option("--n", sa.n, "Number of draws")->check(CLI::PositiveNumber);
  sample->add_option("--seed", sa.seed, "Master seed");
  sample->add_option("--path", sa.path, "Weight construction")->check(CLI::IsMember({"order", "dirichlet"}));
  sample->add_option("--out", sa.out, "Output file (default: standard output)");

  AstArgs aa;
  auto* ast = app.add_subcommand("ast", "Evaluate the additive Stieltjes transform by every route");
  ast->add_option("--dist", aa.dist, "Law, e.g. beta:1.5,1.5:0,1")->required();
  ast->add_option("--d", aa.order, "Transform order")->required();
  ast->add_option("--z", aa.z, "Evaluation point; repeatable (default: 21-point grid)");
  ast->add_option("--out", aa.out, "Output file (default: standard output)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification checks and print a report");
  verify->add_option("--check", va.checks, "Check id, e.g. thm3.1:r=1,2; repeatable");
  verify->add_flag("--all", va.all, "Run the default suite");
  verify->add_option("--seed", va.seed, "Master seed");
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"text", "csv"}));
  verify->add_option("--out", va.out, "Output file (default: standard output)");
  verify->add_option("--samples", va.samples, "Monte Carlo draws per check")->check(CLI::PositiveNumber);
  verify->add_option("--alpha", va.alpha, "KS significance level")->check(CLI::Range(1e-12, 0.5));
  verify->add_option("--workers", va.workers, "Concurrent checks (0: hardware concurrency)");

  std::vector<const char*> argv = {"rwa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sample) return cmd_sample(sa, out);
    if (*ast) return cmd_ast(aa, out);
    return cmd_verify(va, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace rwa::cli
