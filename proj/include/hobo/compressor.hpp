/// @file compressor.hpp
/// @brief Low-rank lightweighting of dense coefficient tensors: mode-1
/// unfolding, SVD factoring, rank truncation, and cost evaluation straight
/// through the factors.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hobo/polynomial.hpp"
#include "hobo/svd.hpp"
#include "hobo/tensor.hpp"

namespace hobo {

/// Truncatable SVD of a tensor unfolding.  rows x cols is the unfolded
/// shape; source_shape remembers the tensor it came from.
struct SvdFactors {
  int rows = 0;
  int cols = 0;
  std::vector<double> singular_values;  ///< non-increasing, >= 0
  Matrix left_vectors;                  ///< rows x rank, orthonormal columns
  Matrix right_vectors;                 ///< cols x rank, orthonormal columns
  std::vector<int> source_shape;

  int rank() const { return static_cast<int>(singular_values.size()); }
};

/// Mode-1 unfolding: row = first index, column = remaining indices flattened
/// row-major.  A bijective reshape of the dense entries.
inline Matrix unfold_mode1(const HoboTensor& t) {
  if (t.order() < 2) {
    throw std::invalid_argument("unfolding needs a tensor of order >= 2");
  }
  if (t.n() == 0) return Matrix(0, 0);
  std::size_t cols = t.size() / static_cast<std::size_t>(t.n());
  Matrix m(t.n(), static_cast<int>(cols));
  m.data() = t.entries();
  return m;
}

/// Inverse reshape of unfold_mode1.
inline HoboTensor refold_mode1(const Matrix& m, int n, int order) {
  HoboTensor t(n, order);
  if (m.rows() != n || m.data().size() != t.size()) {
    throw std::invalid_argument("matrix shape does not match tensor shape");
  }
  t.entries() = m.data();
  return t;
}

/// Full compact SVD of a matrix, keeping the originating tensor shape.
inline SvdFactors factorize(const Matrix& m, std::vector<int> source_shape) {
  SvdResult svd = jacobi_svd(m);
  SvdFactors f;
  f.rows = m.rows();
  f.cols = m.cols();
  f.singular_values = std::move(svd.sigma);
  f.left_vectors = std::move(svd.u);
  f.right_vectors = std::move(svd.v);
  f.source_shape = std::move(source_shape);
  return f;
}

inline SvdFactors factorize(const Matrix& m) {
  return factorize(m, {m.rows(), m.cols()});
}

/// Unfold-then-factor convenience for tensors.
inline SvdFactors factorize(const HoboTensor& t) {
  return factorize(unfold_mode1(t), t.shape());
}

/// Keeps the leading `rank` singular triples.
inline SvdFactors truncate(const SvdFactors& f, int rank) {
  if (rank < 1 || rank > f.rank()) {
    throw std::out_of_range("rank must be in [1, " +
                            std::to_string(f.rank()) + "]");
  }
  SvdFactors out;
  out.rows = f.rows;
  out.cols = f.cols;
  out.source_shape = f.source_shape;
  out.singular_values.assign(f.singular_values.begin(),
                             f.singular_values.begin() + rank);
  out.left_vectors = Matrix(f.rows, rank);
  out.right_vectors = Matrix(f.cols, rank);
  for (int s = 0; s < rank; ++s) {
    for (int i = 0; i < f.rows; ++i) {
      out.left_vectors(i, s) = f.left_vectors(i, s);
    }
    for (int i = 0; i < f.cols; ++i) {
      out.right_vectors(i, s) = f.right_vectors(i, s);
    }
  }
  return out;
}

/// Smallest rank keeping every singular value above tau * sigma_1; at least 1.
inline int rank_for_threshold(const SvdFactors& f, double tau) {
  if (f.singular_values.empty()) return 0;
  int rank = 0;
  for (double s : f.singular_values) {
    if (s > tau * f.singular_values.front()) ++rank;
  }
  return std::max(rank, 1);
}

/// Cost through the factors: sum_s sigma_s (u_s . x)(v_s . x^(k-1 fold)),
/// never materializing the rows x cols reconstruction.  Equals the dense
/// contraction when no truncation was applied.
inline double compressed_cost(const SvdFactors& f, const Assignment& x) {
  if (f.source_shape.empty()) {
    throw std::invalid_argument("factors carry no source tensor shape");
  }
  const int n = f.source_shape.front();
  for (int d : f.source_shape) {
    if (d != n) {
      throw std::invalid_argument("source shape must be hypercubic");
    }
  }
  if (static_cast<int>(x.size()) != n || f.rows != n) {
    throw std::invalid_argument("assignment length does not match tensor n");
  }

  // x^(k-1 fold) Kronecker vector in the unfolding's column convention:
  // earlier tensor indices vary slowest.
  std::vector<double> z{1.0};
  for (std::size_t arm = 1; arm < f.source_shape.size(); ++arm) {
    std::vector<double> next;
    next.reserve(z.size() * x.size());
    for (double zv : z) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        next.push_back(zv * static_cast<double>(x[i]));
      }
    }
    z = std::move(next);
  }
  if (static_cast<int>(z.size()) != f.cols) {
    throw std::invalid_argument("factor width does not match source shape");
  }

  double total = 0.0;
  for (int s = 0; s < f.rank(); ++s) {
    double ux = 0.0;
    for (int i = 0; i < f.rows; ++i) {
      ux += f.left_vectors(i, s) * static_cast<double>(x[static_cast<std::size_t>(i)]);
    }
    double vz = 0.0;
    for (int i = 0; i < f.cols; ++i) {
      vz += f.right_vectors(i, s) * z[static_cast<std::size_t>(i)];
    }
    total += f.singular_values[static_cast<std::size_t>(s)] * ux * vz;
  }
  return total;
}

/// Storage and accuracy summary for a rank-r compression of t.
struct CompressionReport {
  std::size_t stored_values_dense = 0;
  std::size_t stored_values_factored = 0;
  double frobenius_error = 0.0;
  double relative_error = 0.0;
};

inline CompressionReport compression_report(const HoboTensor& t, int rank) {
  SvdFactors f = factorize(t);
  if (rank < 1 || rank > f.rank()) {
    throw std::out_of_range("rank must be in [1, " +
                            std::to_string(f.rank()) + "]");
  }
  CompressionReport report;
  report.stored_values_dense = t.size();
  report.stored_values_factored =
      static_cast<std::size_t>(rank) *
      (static_cast<std::size_t>(f.rows) + static_cast<std::size_t>(f.cols) + 1);
  double discarded = 0.0;
  double total = 0.0;
  for (int s = 0; s < f.rank(); ++s) {
    const double sq = f.singular_values[static_cast<std::size_t>(s)] *
                      f.singular_values[static_cast<std::size_t>(s)];
    total += sq;
    if (s >= rank) discarded += sq;
  }
  report.frobenius_error = std::sqrt(discarded);
  report.relative_error =
      total > 0.0 ? report.frobenius_error / std::sqrt(total) : 0.0;
  return report;
}

}  // namespace hobo
