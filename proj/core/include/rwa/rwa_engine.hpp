// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rwa/distributions.hpp"
#include "rwa/random.hpp"

namespace rwa {

/*!
 * S = sum_j V_j X_j with independent X_j ~ inputs[j] and random weights V.
 *
 * Built either from a CompositionSpec (weights are order-statistic spacings;
 * integer block sizes) or from a Dirichlet parameter vector r (any positive
 * reals). One input law per block.
 */
class RwaProblem {
 public:
  static RwaProblem from_composition(CompositionSpec spec, std::vector<IntervalBeta> inputs);
  static RwaProblem from_dirichlet(std::vector<double> r, std::vector<IntervalBeta> inputs);

  std::span<const double> block_sizes() const { return block_sizes_; }
  std::span<const IntervalBeta> inputs() const { return inputs_; }
  std::size_t k() const { return inputs_.size(); }
  double total_order() const;

  // CompositionSpec equivalent of the block sizes, when they are all integers.
  std::optional<CompositionSpec> composition() const;

  // Shared [a, b] of all inputs, if they share one.
  std::optional<std::pair<double, double>> common_support() const;
  // Smallest interval containing every input support.
  std::pair<double, double> hull() const;

 private:
  RwaProblem(std::vector<double> r, std::vector<IntervalBeta> inputs);

  std::vector<double> block_sizes_;
  std::vector<IntervalBeta> inputs_;
};

enum class WeightPath { order_statistics, dirichlet };

std::string_view to_string(WeightPath path);

struct SamplingOptions {
  // Replicates per RNG child stream.
  std::size_t chunk_size = 8192;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/*!
 * `count` i.i.d. draws of S. Chunk c of the output is generated from
 * root.split(c), so the result does not depend on the thread count.
 * Throws std::domain_error for the order-statistics path with non-integer
 * block sizes, and std::logic_error if `root` is not a root stream.
 */
std::vector<double> sample_rwa(const RwaProblem& problem, WeightPath path, const CounterRng& root,
                               std::size_t count, const SamplingOptions& options = {});

// One replicate: fresh weights and fresh X_j.
double sample_rwa_once(const RwaProblem& problem, WeightPath path, CounterRng& rng);

enum class PredictionSource { thm_3_1, thm_3_2, cor_3_1, cor_3_2, none };

std::string_view to_string(PredictionSource source);

struct TheoremPrediction {
  std::optional<IntervalBeta> result;
  PredictionSource source = PredictionSource::none;
};

/*!
 * Closed-form law of S when the inputs fit one of the known families:
 *
 * - every X_i ~ beta(r_i + 1/2, r_i + 1/2): S ~ beta(R + 1/2, R + 1/2), R = sum r_i;
 * - every X_i ~ beta(s_i, r_i - s_i):       S ~ beta(sum s_i, R - sum s_i).
 *
 * The second family is labelled cor_3_2 when all r_i = 1 with arcsine inputs
 * on a symmetric interval, cor_3_1 when every s_i = r_i / 2, and thm_3_2
 * otherwise. The first family takes precedence. Shapes must match within
 * kShapeMatchTolerance; near misses give source = none.
 */
TheoremPrediction predict_distribution(const RwaProblem& problem);

// prod_i AST[F_i; r_i](z), each factor by closed form when one applies and by
// quadrature otherwise.
double ast_product(const RwaProblem& problem, double z);

// AST of order m of S = R X_1 + (1-R) X_2 with X_1 arcsine, X_2 ~ beta(m-1/2, m-1/2)
// on [a, b] and R ~ beta(1, m-1), as a closed expression.
double example_ast_4_1(int m, double a, double b, double z);

// Reference expression for the analogous construction with X_1 ~ beta(3/2, 1/2)
// and claimed law beta(m+1/2, m-1/2), evaluated verbatim:
//   2 / sqrt(1 - z a b + sqrt(D)) * [4 / (2 - (a+b) z + 2 sqrt(D))]^(m-1),
//   D = 1 - (a+b) z + a b z^2.
// It equals sqrt(2) at z = 0, so it cannot be the transform of any law; the
// verification layer reports it against quadrature instead of trusting it.
double example_ast_4_2(int m, double a, double b, double z);

}  // namespace rwa
