#pragma once

// Exact backward error on the polynomial: (p + dp)(xi) = nu_n det(xi I - C - dC)
// evaluated in double-double, then coefficients of dp recovered from values.

#include <span>
#include <stdexcept>
#include <vector>

#include "confed/dd.hpp"
#include "confed/extended_lu.hpp"
#include "confed/linearize.hpp"
#include "confed/matrix.hpp"
#include "confed/perturb.hpp"

namespace confed {

class RecoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// nu_n det(xi I - M), elimination with partial pivoting in extended precision.
template <class S, class T>
S char_value(const Matrix<T>& m, const S& xi, double nu_n) {
  if (!m.square()) throw std::invalid_argument("char_value: matrix must be square");
  const std::size_t n = m.rows();
  Matrix<S> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = -S(m(i, j));
  for (std::size_t i = 0; i < n; ++i) a(i, i) += xi;
  return PivotedLU<S>(std::move(a), Pivoting::Partial).determinant() * S(nu_n);
}

std::vector<double> delta_p_values(const ConfederateParts& parts, const Perturbation& pert,
                                   std::span<const double> nodes);
std::vector<cplx> delta_p_values(const ConfederateParts& parts, const Perturbation& pert,
                                 std::span<const cplx> nodes);

struct DeltaP {
  std::vector<double> coeffs;  // working basis, c ordering (coeffs[0] multiplies phi_{n-1})
  double residual = 0.0;       // size of the recovered degree-n part
  double normInf = 0.0;
  double norm2 = 0.0;
  double valuesInf = 0.0;  // max |dp| over the nodes
  std::vector<double> unscaledCoeffs;  // with respect to the unscaled basis
  double unscaledInf = 0.0;
  double unscaled2 = 0.0;
};

/// Values at xi_j = exp(2 pi i j / n), j = 0..n-1. Inverse DFT.
DeltaP recover_monomial(std::span<const cplx> values);

/// Values at the n+1 interpolation nodes; solves the generalized Vandermonde
/// system [Phi_work(rho_i), phi_n(rho_i)] x = values.
DeltaP recover_orthogonal(const ConfederateParts& parts, std::span<const double> nodes,
                          std::span<const double> values);

/// Infinity-norm condition number of the interpolation matrix.
double vandermonde_condition(const ConfederateParts& parts, std::span<const double> nodes);

/// Picks the node set of the basis, measures dp and recovers it.
DeltaP backward_error(const ConfederateParts& parts, const Perturbation& pert);

}  // namespace confed
