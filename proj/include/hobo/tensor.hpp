/// @file tensor.hpp
/// @brief Dense coefficient tensors for higher-order objectives and the
/// upper-triangular matrix special case for quadratic ones.
///
/// A degree-m monomial with support i1 < ... < im is stored at the single
/// canonical index tuple (i1, ..., i1, i2, ..., im) with the first index
/// repeated enough times to fill the tensor order; binary idempotence makes
/// the repeated index exact.  Every nonzero entry of a canonical build
/// therefore has non-decreasing indices.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hobo/polynomial.hpp"

namespace hobo {

/// Hard cap on dense storage; larger instances must stay on the sparse path.
inline constexpr std::size_t kMaxDenseEntries = 100'000'000;

namespace detail {

inline std::size_t checked_pow(int n, int order) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::size_t size = 1;
  for (int i = 0; i < order; ++i) {
    if (n > 0 && size > kMaxDenseEntries / static_cast<std::size_t>(n)) {
      throw std::length_error("dense tensor would exceed " +
                              std::to_string(kMaxDenseEntries) + " entries");
    }
    size *= static_cast<std::size_t>(n);
  }
  return size;
}

}  // namespace detail

/// Dense order-k coefficient tensor of shape n^k, row-major.
class HoboTensor {
 public:
  HoboTensor(int n, int order)
      : n_(n), order_(order), entries_(detail::checked_pow(n, order), 0.0) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
  }

  int n() const { return n_; }
  int order() const { return order_; }
  std::size_t size() const { return entries_.size(); }
  std::vector<int> shape() const {
    return std::vector<int>(static_cast<std::size_t>(order_), n_);
  }

  std::size_t flat_index(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_) {
      throw std::invalid_argument("index tuple length must equal the order");
    }
    std::size_t flat = 0;
    for (int i : idx) {
      if (i < 0 || i >= n_) throw std::out_of_range("tensor index out of range");
      flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
    }
    return flat;
  }

  double at(std::span<const int> idx) const { return entries_[flat_index(idx)]; }
  double& at(std::span<const int> idx) { return entries_[flat_index(idx)]; }
  double at(std::initializer_list<int> idx) const {
    return entries_[flat_index(std::span<const int>(idx.begin(), idx.size()))];
  }
  double& at(std::initializer_list<int> idx) {
    return entries_[flat_index(std::span<const int>(idx.begin(), idx.size()))];
  }

  const std::vector<double>& entries() const { return entries_; }
  std::vector<double>& entries() { return entries_; }

  bool operator==(const HoboTensor&) const = default;

 private:
  int n_;
  int order_;
  std::vector<double> entries_;
};

/// Pass for `order` to size the tensor from the polynomial degree.
inline constexpr int kAutoOrder = 0;

/// Places every term of `p` at its canonical index tuple.  The offset is
/// deliberately left out (a contraction has no constant slot); callers add
/// it back after contracting.
inline HoboTensor build_hobo_tensor(const Polynomial& p, int order = kAutoOrder) {
  int degree = p.degree();
  if (order == kAutoOrder) order = std::max(degree, 1);
  if (order < degree) {
    throw std::invalid_argument("order " + std::to_string(order) +
                                " is below the polynomial degree " +
                                std::to_string(degree));
  }
  HoboTensor t(p.num_vars(), order);
  std::vector<int> idx(static_cast<std::size_t>(order));
  for (const Term& term : p.terms()) {
    const int m = static_cast<int>(term.vars.size());
    for (int pos = 0; pos <= order - m; ++pos) idx[pos] = term.vars[0];
    for (int pos = 1; pos < m; ++pos) idx[order - m + pos] = term.vars[pos];
    t.at(idx) += term.coef;
  }
  return t;
}

/// Inverse of the canonical build, accepting arbitrary dense tensors:
/// each entry's index multiset reduces to its sorted unique support, and
/// entries sharing a support sum together.
inline Polynomial tensor_to_polynomial(const HoboTensor& t) {
  std::vector<Term> raw;
  const int n = t.n();
  const int k = t.order();
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  const auto& entries = t.entries();
  for (std::size_t flat = 0; flat < entries.size(); ++flat) {
    if (entries[flat] != 0.0) {
      std::size_t rest = flat;
      for (int pos = k - 1; pos >= 0; --pos) {
        idx[pos] = static_cast<int>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
      }
      raw.push_back(Term{idx, entries[flat]});  // from_terms dedups indices
    }
  }
  return Polynomial::from_terms(n, raw);
}

/// Upper-triangular matrix form of a quadratic objective.
class QuboMatrix {
 public:
  explicit QuboMatrix(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    detail::checked_pow(n, 2);
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    0.0);
  }

  int n() const { return n_; }
  double at(int i, int j) const { return entries_[index(i, j)]; }
  double& at(int i, int j) { return entries_[index(i, j)]; }
  const std::vector<double>& entries() const { return entries_; }

  bool operator==(const QuboMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
      throw std::out_of_range("matrix index out of range");
    }
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> entries_;
};

/// Linear coefficients on the diagonal, quadratic ones above it.
inline QuboMatrix build_qubo_matrix(const Polynomial& p) {
  if (p.degree() > 2) {
    throw std::invalid_argument(
        "polynomial degree exceeds 2; use the tensor form");
  }
  QuboMatrix q(p.num_vars());
  for (const Term& t : p.terms()) {
    if (t.vars.size() == 1) {
      q.at(t.vars[0], t.vars[0]) += t.coef;
    } else {
      q.at(t.vars[0], t.vars[1]) += t.coef;
    }
  }
  return q;
}

/// x^T Q x over binary x; equals evaluate(p, x) - offset for the source
/// polynomial.
inline double quadratic_form(const QuboMatrix& q, const Assignment& x) {
  if (static_cast<int>(x.size()) != q.n()) {
    throw std::invalid_argument("assignment length does not match matrix size");
  }
  double total = 0.0;
  for (int i = 0; i < q.n(); ++i) {
    if (!x[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < q.n(); ++j) {
      if (x[static_cast<std::size_t>(j)]) total += q.at(i, j);
    }
  }
  return total;
}

}  // namespace hobo
