#pragma once

#include <span>
#include <vector>

#include "confed/basis.hpp"
#include "confed/matrix.hpp"

namespace confed {

struct EigResult {
  std::vector<cplx> values;  // sorted by real part, then imaginary part
  int iterations = 0;
  bool converged = false;
};

/// Householder reduction to Hessenberg form followed by Francis double-shift QR.
EigResult hessenberg_qr(const Matrix<double>& m);

/// Eigenvalues of a symmetric tridiagonal matrix (implicit QL). `diag` has
/// length m, `off` length m-1. When `first_row` is non-null it receives the
/// first components of the normalized eigenvectors, in the same order as the
/// returned values (ascending).
std::vector<double> tridiagonal_eigen(std::vector<double> diag, std::vector<double> off,
                                      std::vector<double>* first_row, bool* converged = nullptr);

/// All eigenvalues of a dense symmetric matrix, ascending.
std::vector<double> sym_eigenvalues(const Matrix<double>& a);

struct Quadrature {
  std::vector<double> nodes;  // ascending
  std::vector<double> weights;
  bool converged = false;
};

/// Gauss rule with m nodes for the orthogonal family with recurrence rec[1..m]
/// (rec[0] unused) and zeroth moment mu0.
Quadrature golub_welsch(std::span<const RecurrenceTriple> rec, int m, double mu0);

/// rec[1..m] for Jacobi(a, b).
std::vector<RecurrenceTriple> jacobi_recurrence(double a, double b, int m);
/// Integral of (1-x)^a (1+x)^b over [-1, 1].
double jacobi_mu0(double a, double b);

/// Roots of phi_n + c^T Phi via the eigenvalues of the working confederate matrix.
EigResult roots_of_poly(const BasisSpec& spec, std::span<const double> c);

}  // namespace confed
