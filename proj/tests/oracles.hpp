#pragma once

// Test-side reference computations, deliberately independent of the library
// algorithms (no LU, no Clenshaw, no QR).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using LD = long double;
using Poly = std::vector<LD>;  // ascending coefficients

inline Poly padd(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0L);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Poly pmul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0L);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly pscale(const Poly& a, LD s) {
  Poly r = a;
  for (auto& x : r) x *= s;
  return r;
}

/// Cofactor expansion along the first row; matrix given row-major as nested vectors.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  T det = T(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const T term = a[0][j] * cofactor_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// det(xI - M) as a polynomial in x by cofactor expansion over polynomial entries.
inline Poly charpoly_cofactor(const std::vector<std::vector<LD>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? Poly{-m[i][j], 1.0L} : Poly{-m[i][j]};
  struct Rec {
    static Poly det(const std::vector<std::vector<Poly>>& a) {
      const std::size_t n = a.size();
      if (n == 1) return a[0][0];
      Poly acc{0.0L};
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
          std::vector<Poly> row;
          for (std::size_t k = 0; k < n; ++k)
            if (k != j) row.push_back(a[i][k]);
          minor.push_back(row);
        }
        const Poly term = pmul(a[0][j], det(minor));
        acc = padd(acc, (j % 2 == 0) ? term : pscale(term, -1.0L));
      }
      return acc;
    }
  };
  return Rec::det(a);
}

/// Adjugate column adj(A) e_1 via cofactors: entry i is (-1)^{i} det(A without row 0, col i).
inline std::vector<LD> adjugate_first_column(const std::vector<std::vector<LD>>& a) {
  const std::size_t n = a.size();
  std::vector<LD> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // adj(A)_{i0} = (-1)^{i+0} M_{0i}: minor deleting row 0 and column i.
    std::vector<std::vector<LD>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LD> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const LD m = n == 1 ? 1.0L : cofactor_det(minor);
    out[i] = (i % 2 == 0) ? m : -m;
  }
  return out;
}

/// Moments int x^k (1-x)^a (1+x)^b dx from the integration-by-parts recurrence
/// (k + a + b + 2) m_{k+1} = k m_{k-1} + (b - a) m_k.
inline std::vector<LD> jacobi_moments(LD a, LD b, int kmax) {
  std::vector<LD> m(static_cast<std::size_t>(kmax) + 1);
  m[0] = std::exp((a + b + 1) * std::log(2.0L) + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
  if (kmax >= 1) m[1] = (b - a) * m[0] / (a + b + 2);
  for (int k = 1; k < kmax; ++k) m[k + 1] = (k * m[k - 1] + (b - a) * m[k]) / (k + a + b + 2);
  return m;
}

/// Jacobi polynomial values from the explicit sum formula
///   P_k(x) = sum_s C(k+a,k-s) C(k+b,s) ((x-1)/2)^s ((x+1)/2)^{k-s}.
inline LD jacobi_explicit(int k, LD a, LD b, LD x) {
  auto binom = [](LD top, LD bottom) {
    return std::exp(std::lgamma(top + 1) - std::lgamma(bottom + 1) - std::lgamma(top - bottom + 1));
  };
  LD s = 0;
  for (int j = 0; j <= k; ++j)
    s += binom(k + a, k - j) * binom(k + b, j) * std::pow((x - 1) / 2, j) * std::pow((x + 1) / 2, k - j);
  return s;
}

}  // namespace oracle
