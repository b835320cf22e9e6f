// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace rwa {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// Philox4x32 with 10 rounds (Salmon et al., SC'11). Pure function of its inputs.
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/*!
 * Counter-based generator with explicit stream identity.
 *
 * The 128-bit Philox counter is laid out as [stream (64) | position (64)] and
 * the key is the 64-bit master seed. For a fixed seed Philox is a bijection
 * on counters, so two generators with different stream ids never consume the
 * same counter block and their outputs are disjoint.
 *
 * Stream ids: a root stream r (r < 2^32) owns id r << 32. split(c) on a root
 * yields the child id (r << 32) | (c + 1). Children cannot be split again,
 * which keeps every id reachable from a seed unique.
 *
 * Satisfies UniformRandomBitGenerator.
 */
class CounterRng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint32_t kMaxChild = std::numeric_limits<std::uint32_t>::max() - 1;

  // Root stream `root` under `seed`.
  explicit CounterRng(std::uint64_t seed, std::uint32_t root = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform double on the open interval (0, 1) with 53 random bits.
  double uniform();

  // Independent child stream; throws std::logic_error on a child generator
  // or when `child` exceeds kMaxChild.
  CounterRng split(std::uint32_t child) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  bool is_root() const { return (stream_ & 0xffffffffULL) == 0; }
  // Number of 128-bit blocks consumed so far.
  std::uint64_t position() const { return position_; }

 private:
  CounterRng(std::uint64_t seed, std::uint64_t stream, int /*tag*/);

  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  PhiloxCounter buffer_{};
  int buffered_ = 0;  // 64-bit words left in buffer_ (0, 1 or 2)
};

// Standard normal draw (Box-Muller, one value per call).
double standard_normal(CounterRng& rng);

// ln of a Gamma(shape, 1) draw. Marsaglia-Tsang for shape >= 1; for
// shape < 1 the boost G(a) = G(a+1) U^(1/a) is applied in log space so that
// very small draws do not underflow.
double log_gamma_variate(double shape, CounterRng& rng);

// Gamma(shape, 1) draw.
double gamma_variate(double shape, CounterRng& rng);

}  // namespace rwa
