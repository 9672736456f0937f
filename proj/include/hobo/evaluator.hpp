/// @file evaluator.hpp
/// @brief Cost computation: dense tensor contraction, and incremental
/// single-flip deltas driving the annealer and the exhaustive oracle.

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hobo/polynomial.hpp"
#include "hobo/tensor.hpp"

namespace hobo {

/// Full contraction sum over all n^k index tuples.  Exists for fidelity and
/// cross-checking; `contract` below skips tuples that touch an unset bit.
inline double contract_full(const HoboTensor& t, const Assignment& x) {
  if (static_cast<int>(x.size()) != t.n()) {
    throw std::invalid_argument("assignment length does not match tensor n");
  }
  const int n = t.n();
  const int k = t.order();
  const auto& entries = t.entries();
  double total = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (std::size_t flat = 0; flat < entries.size(); ++flat) {
    double prod = entries[flat];
    std::size_t rest = flat;
    for (int pos = k - 1; pos >= 0; --pos) {
      idx[static_cast<std::size_t>(pos)] =
          static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    for (int pos = 0; pos < k; ++pos) {
      prod *= static_cast<double>(x[static_cast<std::size_t>(
          idx[static_cast<std::size_t>(pos)])]);
    }
    total += prod;
  }
  return total;
}

/// Contraction of the tensor with one copy of x per arm, restricted to the
/// support of x: tuples containing an unset variable contribute nothing.
inline double contract(const HoboTensor& t, const Assignment& x) {
  if (static_cast<int>(x.size()) != t.n()) {
    throw std::invalid_argument("assignment length does not match tensor n");
  }
  std::vector<int> support;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) support.push_back(static_cast<int>(i));
  }
  if (support.empty()) return 0.0;

  const int k = t.order();
  const std::size_t s = support.size();
  std::vector<std::size_t> digit(static_cast<std::size_t>(k), 0);
  std::vector<int> idx(static_cast<std::size_t>(k), support[0]);
  double total = 0.0;
  while (true) {
    total += t.at(idx);
    int pos = k - 1;
    while (pos >= 0) {
      auto upos = static_cast<std::size_t>(pos);
      if (++digit[upos] < s) {
        idx[upos] = support[digit[upos]];
        break;
      }
      digit[upos] = 0;
      idx[upos] = support[0];
      --pos;
    }
    if (pos < 0) break;
  }
  return total;
}

/// Per-variable index into a polynomial's term list: which terms contain
/// variable j.  Shared read-only by all annealer restarts.
class FlipIndex {
 public:
  explicit FlipIndex(const Polynomial& p)
      : terms_of_(static_cast<std::size_t>(p.num_vars())) {
    const auto& terms = p.terms();
    for (std::size_t ti = 0; ti < terms.size(); ++ti) {
      for (int v : terms[ti].vars) {
        terms_of_[static_cast<std::size_t>(v)].push_back(static_cast<int>(ti));
      }
    }
  }

  std::span<const int> terms_containing(int var) const {
    if (var < 0 || var >= static_cast<int>(terms_of_.size())) {
      throw std::out_of_range("variable index out of range");
    }
    return terms_of_[static_cast<std::size_t>(var)];
  }

  std::size_t num_vars() const { return terms_of_.size(); }

 private:
  std::vector<std::vector<int>> terms_of_;
};

namespace detail {

inline double delta_flip_over(const Polynomial& p, std::span<const int> term_ids,
                              const Assignment& x, int var) {
  // d/dx_var of the multilinear form, signed by the flip direction.
  double slope = 0.0;
  const auto& terms = p.terms();
  for (int ti : term_ids) {
    const Term& t = terms[static_cast<std::size_t>(ti)];
    double prod = t.coef;
    for (int v : t.vars) {
      if (v == var) continue;
      if (!x[static_cast<std::size_t>(v)]) {
        prod = 0.0;
        break;
      }
    }
    slope += prod;
  }
  return x[static_cast<std::size_t>(var)] ? -slope : slope;
}

}  // namespace detail

/// Cost change of flipping bit `var`, summing only the terms containing it.
inline double delta_flip(const Polynomial& p, const Assignment& x, int var) {
  if (var < 0 || var >= p.num_vars()) {
    throw std::out_of_range("variable index out of range");
  }
  if (static_cast<int>(x.size()) != p.num_vars()) {
    throw std::invalid_argument("assignment length does not match num_vars");
  }
  std::vector<int> ids;
  const auto& terms = p.terms();
  for (std::size_t ti = 0; ti < terms.size(); ++ti) {
    for (int v : terms[ti].vars) {
      if (v == var) {
        ids.push_back(static_cast<int>(ti));
        break;
      }
    }
  }
  return detail::delta_flip_over(p, ids, x, var);
}

/// Same as above through a prebuilt index.
inline double delta_flip(const Polynomial& p, const FlipIndex& index,
                         const Assignment& x, int var) {
  if (static_cast<int>(x.size()) != p.num_vars()) {
    throw std::invalid_argument("assignment length does not match num_vars");
  }
  return detail::delta_flip_over(p, index.terms_containing(var), x, var);
}

}  // namespace hobo
