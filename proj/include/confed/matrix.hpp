#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

namespace confed {

using cplx = std::complex<double>;

/// Dense row-major matrix. Storage only; algorithms live in the modules.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T value = T{}) : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  [[nodiscard]] const std::vector<T>& data() const { return data_; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class A, class B>
auto operator*(const Matrix<A>& a, const Matrix<B>& b) {
  using R = decltype(A{} * B{});
  assert(a.cols() == b.rows());
  Matrix<R> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double frobenius_norm(const Matrix<double>& m);
/// Largest singular value.
double spectral_norm(const Matrix<double>& m);
/// Same, for complex matrices (via the real 2n x 2n embedding).
double spectral_norm(const Matrix<cplx>& m);
double inf_norm(const Matrix<double>& m);
double inf_norm(const Matrix<cplx>& m);

double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);

/// Comma-separated rows, `.17g` formatting.
void write_csv(std::ostream& os, const Matrix<double>& m);

}  // namespace confed
