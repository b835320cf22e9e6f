// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace rwa {

// Argument outside an operation's domain is reported with std::domain_error.
// An iterative method that fails to reach its tolerance raises this instead.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rwa
