// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/rwa_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rwa/transforms.hpp"

namespace rwa {
namespace {

bool near(double x, double y) { return std::abs(x - y) <= kShapeMatchTolerance; }

// Draws weights for one replicate along the chosen path.
class WeightSource {
 public:
  WeightSource(const RwaProblem& problem, WeightPath path) : problem_(problem), path_(path) {
    if (path == WeightPath::order_statistics) {
      spec_ = problem.composition();
      if (!spec_) {
        throw std::domain_error("sample_rwa: order-statistics path needs integer block sizes");
      }
    }
  }

  WeightVector draw(CounterRng& rng) const {
    if (path_ == WeightPath::order_statistics) return order_statistic_weights(*spec_, rng);
    return dirichlet_sample(problem_.block_sizes(), rng);
  }

 private:
  const RwaProblem& problem_;
  WeightPath path_;
  std::optional<CompositionSpec> spec_;
};

double draw_once(const RwaProblem& problem, const WeightSource& weights, double lo, double hi,
                 CounterRng& rng) {
  const WeightVector v = weights.draw(rng);
  const auto inputs = problem.inputs();
  double s = 0.0;
  for (std::size_t j = 0; j < inputs.size(); ++j) s += v.weights[j] * inputs[j].sample(rng);
  return std::clamp(s, lo, hi);
}

double symmetric_factor(double a, double b, double z) {
  const double disc = 1.0 - z * (a + b) + a * b * z * z;
  if (!(disc > 0.0)) throw std::domain_error("example AST: square-root argument must be positive");
  return disc;
}

}  // namespace

RwaProblem::RwaProblem(std::vector<double> r, std::vector<IntervalBeta> inputs)
    : block_sizes_(std::move(r)), inputs_(std::move(inputs)) {
  if (block_sizes_.empty()) throw std::domain_error("RwaProblem: need at least one block");
  if (block_sizes_.size() != inputs_.size()) {
    throw std::domain_error("RwaProblem: number of input laws must equal the number of blocks");
  }
  for (const double rj : block_sizes_) {
    if (!(rj > 0.0) || !std::isfinite(rj)) {
      throw std::domain_error("RwaProblem: block sizes must be positive");
    }
  }
}

RwaProblem RwaProblem::from_composition(CompositionSpec spec, std::vector<IntervalBeta> inputs) {
  const auto sizes = spec.block_sizes();
  return RwaProblem(std::vector<double>(sizes.begin(), sizes.end()), std::move(inputs));
}

RwaProblem RwaProblem::from_dirichlet(std::vector<double> r, std::vector<IntervalBeta> inputs) {
  return RwaProblem(std::move(r), std::move(inputs));
}

double RwaProblem::total_order() const {
  double total = 0.0;
  for (const double r : block_sizes_) total += r;
  return total;
}

std::optional<CompositionSpec> RwaProblem::composition() const {
  std::vector<std::uint32_t> sizes;
  sizes.reserve(block_sizes_.size());
  for (const double r : block_sizes_) {
    if (std::floor(r) != r || r > 1e6) return std::nullopt;
    sizes.push_back(static_cast<std::uint32_t>(r));
  }
  return CompositionSpec::from_block_sizes(sizes);
}

std::optional<std::pair<double, double>> RwaProblem::common_support() const {
  const double a = inputs_.front().lower();
  const double b = inputs_.front().upper();
  for (const auto& x : inputs_) {
    if (x.lower() != a || x.upper() != b) return std::nullopt;
  }
  return std::pair{a, b};
}

std::pair<double, double> RwaProblem::hull() const {
  double a = inputs_.front().lower();
  double b = inputs_.front().upper();
  for (const auto& x : inputs_) {
    a = std::min(a, x.lower());
    b = std::max(b, x.upper());
  }
  return {a, b};
}

std::string_view to_string(WeightPath path) {
  return path == WeightPath::order_statistics ? "order_statistics" : "dirichlet";
}

double sample_rwa_once(const RwaProblem& problem, WeightPath path, CounterRng& rng) {
  const WeightSource weights(problem, path);
  const auto [lo, hi] = problem.hull();
  return draw_once(problem, weights, lo, hi, rng);
}

std::vector<double> sample_rwa(const RwaProblem& problem, WeightPath path, const CounterRng& root,
                               std::size_t count, const SamplingOptions& options) {
  if (!root.is_root()) throw std::logic_error("sample_rwa: generator must be a root stream");
  if (options.chunk_size == 0) throw std::invalid_argument("sample_rwa: chunk_size must be positive");
  const WeightSource weights(problem, path);
  const auto [lo, hi] = problem.hull();

  std::vector<double> out(count);
  const std::size_t chunks = (count + options.chunk_size - 1) / options.chunk_size;
  if (chunks > static_cast<std::size_t>(CounterRng::kMaxChild) + 1) {
    throw std::invalid_argument("sample_rwa: too many chunks for one root stream");
  }

  auto run_chunk = [&](std::size_t c) {
    CounterRng rng = root.split(static_cast<std::uint32_t>(c));
    const std::size_t begin = c * options.chunk_size;
    const std::size_t end = std::min(count, begin + options.chunk_size);
    for (std::size_t i = begin; i < end; ++i) out[i] = draw_once(problem, weights, lo, hi, rng);
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, threads), chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t c = t; c < chunks; c += threads) run_chunk(c);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

std::string_view to_string(PredictionSource source) {
  switch (source) {
    case PredictionSource::thm_3_1:
      return "thm_3_1";
    case PredictionSource::thm_3_2:
      return "thm_3_2";
    case PredictionSource::cor_3_1:
      return "cor_3_1";
    case PredictionSource::cor_3_2:
      return "cor_3_2";
    case PredictionSource::none:
      return "none";
  }
  return "none";
}

TheoremPrediction predict_distribution(const RwaProblem& problem) {
  const auto support = problem.common_support();
  if (!support) return {};
  const auto [a, b] = *support;
  const auto r = problem.block_sizes();
  const auto inputs = problem.inputs();
  const double total = problem.total_order();

  bool symmetric_family = true;
  bool split_family = true;
  bool half_split = true;
  bool semicircle_chain = a == -b;
  double s_total = 0.0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const double p = inputs[i].p();
    const double q = inputs[i].q();
    symmetric_family = symmetric_family && near(p, r[i] + 0.5) && near(q, r[i] + 0.5);
    split_family = split_family && near(p + q, r[i]);
    half_split = half_split && near(p, 0.5 * r[i]) && near(q, 0.5 * r[i]);
    semicircle_chain = semicircle_chain && near(r[i], 1.0) && near(p, 0.5) && near(q, 0.5);
    s_total += p;
  }

  if (symmetric_family) {
    return {IntervalBeta(total + 0.5, total + 0.5, a, b), PredictionSource::thm_3_1};
  }
  if (split_family) {
    const PredictionSource source = semicircle_chain ? PredictionSource::cor_3_2
                                    : half_split     ? PredictionSource::cor_3_1
                                                     : PredictionSource::thm_3_2;
    return {IntervalBeta(s_total, total - s_total, a, b), source};
  }
  return {};
}

double ast_product(const RwaProblem& problem, double z) {
  const auto r = problem.block_sizes();
  const auto inputs = problem.inputs();
  double product = 1.0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const AstQuery query(inputs[i], r[i], z);
    const auto closed = ast_closed_form(query);
    product *= closed ? closed->value : ast_quadrature(query).value;
  }
  return product;
}

double example_ast_4_1(int m, double a, double b, double z) {
  if (m < 1) throw std::domain_error("example_ast_4_1: m must be at least 1");
  const double disc = symmetric_factor(a, b, z);
  const double head = 1.0 / std::sqrt(disc);
  if (m == 1) return head;
  return head * ast_closed_symmetric(m - 1.0, a, b, z);
}

double example_ast_4_2(int m, double a, double b, double z) {
  if (m < 1) throw std::domain_error("example_ast_4_2: m must be at least 1");
  const double disc = symmetric_factor(a, b, z);
  const double inner = 1.0 - z * a * b + std::sqrt(disc);
  if (!(inner > 0.0)) throw std::domain_error("example_ast_4_2: square-root argument must be positive");
  const double head = 2.0 / std::sqrt(inner);
  if (m == 1) return head;
  return head * ast_closed_symmetric(m - 1.0, a, b, z);
}

}  // namespace rwa
