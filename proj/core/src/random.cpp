// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rwa {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint32_t root)
    : seed_(seed), stream_(static_cast<std::uint64_t>(root) << 32) {}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream, int)
    : seed_(seed), stream_(stream) {}

CounterRng CounterRng::split(std::uint32_t child) const {
  if (!is_root()) throw std::logic_error("CounterRng: only root streams can be split");
  if (child > kMaxChild) throw std::logic_error("CounterRng: child index out of range");
  return CounterRng(seed_, stream_ | (static_cast<std::uint64_t>(child) + 1), 0);
}

void CounterRng::refill() {
  const PhiloxCounter ctr = {static_cast<std::uint32_t>(position_),
                             static_cast<std::uint32_t>(position_ >> 32),
                             static_cast<std::uint32_t>(stream_),
                             static_cast<std::uint32_t>(stream_ >> 32)};
  const PhiloxKey key = {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = philox4x32_10(ctr, key);
  buffered_ = 2;
  ++position_;
}

CounterRng::result_type CounterRng::operator()() {
  if (buffered_ == 0) refill();
  const int word = 2 - buffered_;
  --buffered_;
  return static_cast<std::uint64_t>(buffer_[2 * word]) |
         (static_cast<std::uint64_t>(buffer_[2 * word + 1]) << 32);
}

double CounterRng::uniform() {
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double standard_normal(CounterRng& rng) {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double log_gamma_variate(double shape, CounterRng& rng) {
  if (!(shape > 0.0)) throw std::domain_error("gamma_variate: shape must be positive");
  if (shape < 1.0) {
    const double boosted = log_gamma_variate(shape + 1.0, rng);
    return boosted + std::log(rng.uniform()) / shape;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return std::log(d) + std::log(v);
    }
  }
}

double gamma_variate(double shape, CounterRng& rng) { return std::exp(log_gamma_variate(shape, rng)); }

}  // namespace rwa
