// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rwa/distributions.hpp"

namespace rwa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Seed used when neither --seed nor RWA_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "RWA_SEED";

/*!
 * Distribution flag grammar:
 *
 *   beta:p,q[:a,b]    uniform:a,b    arcsine:a,b    wigner:sigma    ps:theta,sigma
 *
 * Throws std::invalid_argument on malformed text and std::domain_error on
 * invalid parameters.
 */
IntervalBeta parse_distribution(std::string_view text);

// `n:c1,c2,...` with strictly increasing cuts; a bare `n` cuts at every point.
CompositionSpec parse_spec(std::string_view text);

// Default seed, honoring RWA_SEED. Throws std::invalid_argument if it is not
// an unsigned 64-bit integer.
std::uint64_t default_seed();

// Runs the tool with argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rwa::cli
