/// @file oracle.hpp
/// @brief Exhaustive ground truth at desk scale.  No pruning on purpose:
/// correctness of this module must be obvious.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hobo/evaluator.hpp"
#include "hobo/polynomial.hpp"

namespace hobo {

struct BruteForceResult {
  Assignment assignment;
  double cost = 0.0;
};

/// Exact minimum over all 2^n assignments, visiting states in reflected
/// Gray-code order so each step is one bit flip with an incremental delta.
/// Ties resolve to the lexicographically smallest assignment (variable 0
/// most significant).  Guarded to n <= 24.
inline BruteForceResult brute_force_min(const Polynomial& p) {
  const int n = p.num_vars();
  if (n > 24) {
    throw std::invalid_argument("brute force is limited to 24 variables");
  }
  Assignment x(static_cast<std::size_t>(n));
  double cost = evaluate(p, x);
  BruteForceResult best{x, cost};

  const FlipIndex index(p);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < total; ++s) {
    const int j = std::countr_zero(s);
    cost += delta_flip(p, index, x, j);
    x.flip(static_cast<std::size_t>(j));
    if (cost < best.cost || (cost == best.cost && x < best.assignment)) {
      best.assignment = x;
      best.cost = cost;
    }
  }
  best.cost = evaluate(p, best.assignment);
  return best;
}

/// All 2^n (assignment, cost) pairs in lexicographic order of the
/// assignment, variable 0 most significant.  Guarded to n <= 16.
inline std::vector<std::pair<Assignment, double>> full_landscape(
    const Polynomial& p) {
  const int n = p.num_vars();
  if (n > 16) {
    throw std::invalid_argument("full landscape is limited to 16 variables");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::pair<Assignment, double>> landscape;
  landscape.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Assignment x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      x.set(static_cast<std::size_t>(i), (code >> (n - 1 - i)) & 1);
    }
    landscape.emplace_back(std::move(x), 0.0);
    landscape.back().second = evaluate(p, landscape.back().first);
  }
  return landscape;
}

}  // namespace hobo
