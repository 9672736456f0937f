/// @file svd.hpp
/// @brief Dense singular value decomposition via one-sided Jacobi rotations.
/// Sized for the small unfoldings this library produces (up to ~10^4
/// entries); converges to ~1e-14 relative accuracy on those.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hobo {

/// Minimal dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
      throw std::invalid_argument("matrix dimensions must be >= 0");
    }
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                 0.0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Compact decomposition a = u * diag(sigma) * v^T with r = min(rows, cols)
/// columns, sigma non-increasing and u, v column-orthonormal.
struct SvdResult {
  Matrix u;
  std::vector<double> sigma;
  Matrix v;
};

namespace detail {

// One-sided Jacobi on a tall matrix (rows >= cols): orthogonalize column
// pairs until all cross terms vanish, then read singular values off the
// column norms.  v accumulates the rotations and stays exactly orthogonal.
inline void jacobi_orthogonalize(Matrix& b, Matrix& v) {
  const int m = b.rows();
  const int n = b.cols();
  const double tol = 1e-15;
  const int max_sweeps = 100;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double worst = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int i = 0; i < m; ++i) {
          app += b(i, p) * b(i, p);
          aqq += b(i, q) * b(i, q);
          apq += b(i, p) * b(i, q);
        }
        const double scale = std::sqrt(app * aqq);
        if (scale == 0.0 || std::abs(apq) <= tol * scale) continue;
        worst = std::max(worst, std::abs(apq) / scale);

        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < m; ++i) {
          const double bp = b(i, p);
          const double bq = b(i, q);
          b(i, p) = c * bp - s * bq;
          b(i, q) = s * bp + c * bq;
        }
        for (int i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (worst == 0.0) return;
  }
  throw std::runtime_error("jacobi svd did not converge");
}

// Replace null columns of u with unit vectors orthogonal to all other
// columns, so u stays column-orthonormal even at zero singular values.
inline void complete_orthonormal_columns(Matrix& u, std::vector<bool>& filled) {
  const int m = u.rows();
  const int r = u.cols();
  auto project_out = [&](std::vector<double>& col) {
    for (int other = 0; other < r; ++other) {
      if (!filled[static_cast<std::size_t>(other)]) continue;
      double dot = 0.0;
      for (int i = 0; i < m; ++i) {
        dot += col[static_cast<std::size_t>(i)] * u(i, other);
      }
      for (int i = 0; i < m; ++i) {
        col[static_cast<std::size_t>(i)] -= dot * u(i, other);
      }
    }
  };

  for (int j = 0; j < r; ++j) {
    if (filled[static_cast<std::size_t>(j)]) continue;
    std::vector<double> best;
    double best_norm = 0.0;
    for (int candidate = 0; candidate < m; ++candidate) {
      std::vector<double> col(static_cast<std::size_t>(m), 0.0);
      col[static_cast<std::size_t>(candidate)] = 1.0;
      project_out(col);
      project_out(col);  // second pass scrubs rounding residue
      double norm = 0.0;
      for (double vv : col) norm += vv * vv;
      norm = std::sqrt(norm);
      if (norm > best_norm) {
        best_norm = norm;
        best = std::move(col);
      }
    }
    if (best_norm < 1e-8) {
      throw std::runtime_error("failed to complete orthonormal basis");
    }
    for (int i = 0; i < m; ++i) {
      u(i, j) = best[static_cast<std::size_t>(i)] / best_norm;
    }
    filled[static_cast<std::size_t>(j)] = true;
  }
}

inline SvdResult jacobi_svd_tall(const Matrix& a) {
  Matrix b = a;
  const int m = b.rows();
  const int n = b.cols();
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  jacobi_orthogonalize(b, v);

  std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double norm = 0.0;
    for (int i = 0; i < m; ++i) norm += b(i, j) * b(i, j);
    sigma[static_cast<std::size_t>(j)] = std::sqrt(norm);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return sigma[static_cast<std::size_t>(lhs)] >
           sigma[static_cast<std::size_t>(rhs)];
  });

  SvdResult result;
  result.u = Matrix(m, n);
  result.v = Matrix(n, n);
  result.sigma.resize(static_cast<std::size_t>(n));
  std::vector<bool> filled(static_cast<std::size_t>(n), true);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    const double s = sigma[static_cast<std::size_t>(src)];
    result.sigma[static_cast<std::size_t>(j)] = s;
    if (s > 0.0) {
      for (int i = 0; i < m; ++i) result.u(i, j) = b(i, src) / s;
    } else {
      filled[static_cast<std::size_t>(j)] = false;
    }
    for (int i = 0; i < n; ++i) result.v(i, j) = v(i, src);
  }
  complete_orthonormal_columns(result.u, filled);
  return result;
}

}  // namespace detail

/// One-sided Jacobi SVD of an arbitrary dense matrix; throws on non-finite
/// input or (pathologically) failed convergence.
inline SvdResult jacobi_svd(const Matrix& a) {
  for (double v : a.data()) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("svd input must be finite");
    }
  }
  if (a.rows() >= a.cols()) {
    return detail::jacobi_svd_tall(a);
  }
  SvdResult t = detail::jacobi_svd_tall(a.transposed());
  return SvdResult{std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

}  // namespace hobo
