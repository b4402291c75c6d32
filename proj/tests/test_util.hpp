#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "confed/dd.hpp"
#include "confed/extended_lu.hpp"
#include "confed/matrix.hpp"

namespace testutil {

inline std::vector<double> normal_vector(std::mt19937_64& gen, int n, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, scale);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = nd(gen);
  return v;
}

inline std::vector<std::vector<long double>> nested(const confed::Matrix<double>& m) {
  std::vector<std::vector<long double>> out(m.rows(), std::vector<long double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline double rel(double got, double ref) { return std::abs(got - ref) / std::max(std::abs(ref), 1e-300); }

/// adj(A) e_1 = det(A) A^{-1} e_1 in double-double.
inline std::vector<double> adjugate_e1(const confed::Matrix<double>& a) {
  using confed::DoubleDouble;
  confed::PivotedLU<DoubleDouble> lu(confed::promote<DoubleDouble>(a), confed::Pivoting::Partial);
  std::vector<DoubleDouble> e(a.rows(), DoubleDouble(0.0));
  e[0] = 1.0;
  const auto x = lu.solve(e);
  const DoubleDouble det = lu.determinant();
  std::vector<double> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = (det * x[i]).to_double();
  return out;
}

inline confed::Matrix<double> shifted(const confed::Matrix<double>& m, double x) {
  confed::Matrix<double> a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = (i == j ? x : 0.0) - m(i, j);
  return a;
}

}  // namespace testutil
