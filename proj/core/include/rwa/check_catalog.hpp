// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rwa/verification.hpp"

namespace rwa {

/*!
 * Named verification checks.
 *
 * A check is written `name[:key=value]...`, values being comma lists:
 *
 *   thm3.1:r=1,2[:support=a,b][:path=order|dirichlet]
 *   thm3.2:r=1,2,3:s=0.5,1,1.5[:support=a,b][:path=...]
 *   cor3.1:r=2,2[:support=a,b][:path=...]
 *   cor3.2:n=3[:sigma=1]
 *   example4.1:m=3[:support=-1,1]
 *   example4.2:m=2[:support=0,1]
 *   example4.3:k=3[:support=-1,2][:path=...]
 *   example4.4:k=2[:sigma=1][:path=...]
 *   weights:r=1,2
 *
 * Unknown names or malformed parameters throw std::invalid_argument.
 */

// The suite run by `verify --all`.
std::vector<std::string> default_check_suite();

// Root stream for a check: 32-bit FNV-1a of its id. Ids in the default suite
// map to distinct streams.
std::uint32_t stream_for_check(std::string_view check_id);

VerificationReport run_check(std::string_view check, const VerificationConfig& config,
                             std::uint64_t master_seed);

// Runs the checks concurrently and returns the reports ordered by check_id.
std::vector<VerificationReport> run_checks(std::span<const std::string> checks,
                                           const VerificationConfig& config,
                                           std::uint64_t master_seed, unsigned workers = 0);

}  // namespace rwa
