#pragma once

// Gaussian elimination over an extended-precision scalar (DoubleDouble or
// ComplexDD). Used by the determinant oracle, the interpolation solve and the
// explicit Lagrange matrix.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confed/dd.hpp"
#include "confed/matrix.hpp"

namespace confed {

/// All pivot candidates in some elimination column were exactly zero.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

enum class Pivoting { Partial, Complete };

template <class S>
class PivotedLU {
 public:
  /// Partial pivoting picks the largest magnitude in the column, lowest row
  /// index on ties. Complete pivoting additionally permutes columns.
  PivotedLU(Matrix<S> a, Pivoting pivoting) : lu_(std::move(a)) {
    if (!lu_.square()) throw std::invalid_argument("PivotedLU: matrix must be square");
    const std::size_t n = lu_.rows();
    row_perm_.resize(n);
    col_perm_.resize(n);
    std::iota(row_perm_.begin(), row_perm_.end(), std::size_t{0});
    std::iota(col_perm_.begin(), col_perm_.end(), std::size_t{0});
    max_pivot_ = 0.0;
    min_pivot_ = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pr = k, pc = k;
      double best = -1.0;
      const std::size_t col_end = pivoting == Pivoting::Complete ? n : k + 1;
      for (std::size_t j = k; j < col_end; ++j)
        for (std::size_t i = k; i < n; ++i) {
          const double m = magnitude(lu_(i, j));
          if (m > best) {
            best = m;
            pr = i;
            pc = j;
          }
        }
      if (!(best > 0.0)) throw SingularMatrixError("exactly singular at elimination step " + std::to_string(k));
      if (pr != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(pr, j));
        std::swap(row_perm_[k], row_perm_[pr]);
        sign_flips_ ^= 1;
      }
      if (pc != k) {
        for (std::size_t i = 0; i < n; ++i) std::swap(lu_(i, k), lu_(i, pc));
        std::swap(col_perm_[k], col_perm_[pc]);
        sign_flips_ ^= 1;
      }
      max_pivot_ = std::max(max_pivot_, best);
      min_pivot_ = std::min(min_pivot_, best);
      const S pivot = lu_(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const S factor = lu_(i, k) / pivot;
        lu_(i, k) = factor;
        if (magnitude(factor) == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
      }
    }
  }

  [[nodiscard]] std::size_t size() const { return lu_.rows(); }

  [[nodiscard]] S determinant() const {
    S det(1.0);
    for (std::size_t k = 0; k < size(); ++k) det *= lu_(k, k);
    return sign_flips_ ? -det : det;
  }

  /// Largest over smallest pivot magnitude; a cheap conditioning indicator.
  [[nodiscard]] double pivot_ratio() const { return max_pivot_ / min_pivot_; }

  [[nodiscard]] std::vector<S> solve(const std::vector<S>& b) const {
    const std::size_t n = size();
    if (b.size() != n) throw std::invalid_argument("PivotedLU::solve: dimension mismatch");
    std::vector<S> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      S acc = b[row_perm_[i]];
      for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * y[j];
      y[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      S acc = y[i];
      for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(i, j) * y[j];
      y[i] = acc / lu_(i, i);
    }
    std::vector<S> x(n);
    for (std::size_t k = 0; k < n; ++k) x[col_perm_[k]] = y[k];
    return x;
  }

  [[nodiscard]] Matrix<S> inverse() const {
    const std::size_t n = size();
    Matrix<S> inv(n, n);
    std::vector<S> e(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(e.begin(), e.end(), S(0.0));
      e[j] = S(1.0);
      const auto col = solve(e);
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
  }

 private:
  Matrix<S> lu_;
  std::vector<std::size_t> row_perm_;
  std::vector<std::size_t> col_perm_;
  int sign_flips_ = 0;
  double max_pivot_ = 0.0;
  double min_pivot_ = 0.0;
};

template <class S, class T>
Matrix<S> promote(const Matrix<T>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = S(m(i, j));
  return out;
}

}  // namespace confed
