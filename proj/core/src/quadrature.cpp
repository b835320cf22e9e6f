// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa/quadrature.hpp"

#include <limits>
#include <numbers>

namespace rwa::quad {
namespace {

// Nodes whose endpoint distance underflows carry no weight worth keeping.
constexpr double kMinComplement = 1e-300;

bool make_node(double u, Node& out) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  const double s = half_pi * std::sinh(u);
  const double cosh_s = std::cosh(s);
  const double complement = std::exp(-s) / cosh_s;
  if (!(complement > kMinComplement) || !std::isfinite(cosh_s)) return false;
  out.abscissa = std::tanh(s);
  out.complement = complement;
  out.weight = half_pi * std::cosh(u) / (cosh_s * cosh_s);
  return true;
}

}  // namespace

TanhSinhTable::TanhSinhTable() : levels_(kMaxLevel + 1) {
  Node node{};
  // Level 0: u = 0, 1, 2, ...
  for (int k = 0; make_node(static_cast<double>(k), node); ++k) {
    levels_[0].push_back(node);
  }
  double h = 1.0;
  for (int l = 1; l <= kMaxLevel; ++l) {
    h *= 0.5;
    for (long k = 1; make_node(static_cast<double>(k) * h, node); k += 2) {
      levels_[static_cast<std::size_t>(l)].push_back(node);
    }
  }
}

const TanhSinhTable& TanhSinhTable::instance() {
  static const TanhSinhTable table;
  return table;
}

}  // namespace rwa::quad
