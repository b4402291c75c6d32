#include "confed/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "confed/eig.hpp"

namespace confed {

double frobenius_norm(const Matrix<double>& m) {
  double s = 0.0;
  for (double x : m.data()) s += x * x;
  return std::sqrt(s);
}

double spectral_norm(const Matrix<double>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const double f = frobenius_norm(m);
  if (f == 0.0) return 0.0;
  // Normalize first so the Gram matrix cannot overflow.
  Matrix<double> a = m;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) /= f;
  const auto gram = a.transpose() * a;
  const auto ev = sym_eigenvalues(gram);
  return f * std::sqrt(std::max(0.0, ev.back()));
}

double spectral_norm(const Matrix<cplx>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  Matrix<double> e(2 * r, 2 * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      e(i, j) = m(i, j).real();
      e(i, j + c) = -m(i, j).imag();
      e(i + r, j) = m(i, j).imag();
      e(i + r, j + c) = m(i, j).real();
    }
  return spectral_norm(e);
}

double inf_norm(const Matrix<double>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (double x : m.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

double inf_norm(const Matrix<cplx>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (const cplx& x : m.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

double norm2(std::span<const double> v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += (x / scale) * (x / scale);
  return scale * std::sqrt(s);
}

double norm_inf(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

void write_csv(std::ostream& os, const Matrix<double>& m) {
  char buf[32];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j) os << ',';
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace confed
