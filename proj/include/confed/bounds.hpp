#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "confed/basis.hpp"
#include "confed/linearize.hpp"
#include "confed/matrix.hpp"

namespace confed {

struct NodeSet {
  std::vector<cplx> nodes;  // interpolation nodes (n for monomial kinds, n+1 otherwise)
  std::vector<cplx> roots;  // roots of phi_n
  bool real = false;

  [[nodiscard]] std::vector<double> real_nodes() const;
  [[nodiscard]] std::vector<double> real_roots() const;
};

/// Chebyshev: rho_j = cos(j pi/n), r_j = cos((2j+1) pi/2n).
/// Jacobi: 1, the roots of P_{n-1}^{(a+1,b+1)}, -1 (descending).
/// Monomial kinds: n-th roots of unity; roots of x^n + 1 or of x^n.
NodeSet node_sets(const BasisSpec& spec);

struct MS {
  double M = 0.0;  // max 1/|xi - r_j|
  double S = 0.0;  // sum 1/|xi - r_j|
};

class CoincidentNodeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

MS ms_constants(std::span<const cplx> roots, cplx xi);
MS ms_constants(std::span<const double> roots, double xi);

struct Gamma {
  double M = 0.0, S = 0.0;
  double gamma1 = 0.0, gammac = 0.0, gammaH = 0.0;
};

/// Gamma_1 = M |phi_n| ||w||, Gamma_c = chi_eff ||Phi||, Gamma_H = S |phi_n| + Gamma_c (M + S) ||w||,
/// all in the working basis of `parts`.
Gamma gamma_pointwise(const ConfederateParts& parts, cplx xi, std::span<const cplx> roots);

double bound_monomial(int n, double normC, double epsH, double eps1, double epsC);
double bound_cheb_corollary(int n, double normC, double epsH, double eps1, double epsC);

/// First n rows of the inverse interpolation matrix, working basis of `parts`.
Matrix<double> lagrange_matrix(const ConfederateParts& parts, std::span<const double> nodes);
Matrix<cplx> lagrange_matrix(const ConfederateParts& parts, std::span<const cplx> nodes);
/// Infinity norm of L-hat for the node set of the basis.
double lagrange_inf_norm(const ConfederateParts& parts);

struct JacobiConstants {
  double Cn = 0.0;
  double mu = 0.0;
  double muRatio = 0.0;  // mu (n + a + 1/2) / pi
  double etaM = 0.0;     // max over nodes of M / n^2
  double etaS = 0.0;     // max over nodes of S / n^3
  double etaD = 0.0;     // max d_k / min d_k
  double maxD = 0.0;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// mu = max w_s / (1 - x_s^2) over the Gauss rule of Jacobi(a+1, b+1) with m nodes.
double jacobi_mu(double a, double b, int m);
/// 12 + (n-1) mu (2n+a+b+1) / 2^(a+b+1) * binom(a+b+n-1, max(a,b)).
double jacobi_cn(double a, double b, int n, double mu);
JacobiConstants jacobi_constants(double a, double b, int n);

struct NodeBound {
  cplx node;
  Gamma gamma;
  double pointwise = 0.0;  // Gamma_1 eps_1 + Gamma_c eps_c + Gamma_H eps_H
};

struct BoundReport {
  std::vector<NodeBound> perNode;
  double LhatInfNorm = 0.0;
  double maxPointwise = 0.0;
  double aggregate = 0.0;        // LhatInfNorm * maxPointwise
  double closedForm = 0.0;  // basis-specific closed form
};

/// Requires H normal: scaled orthogonal parts or the shifted monomial basis.
/// eps are the raw-factor norms ||dH||, ||du||, ||dw||.
BoundReport bound_structured(const ConfederateParts& parts, double epsH, double eps1, double epsC);
/// Same, reusing a previously computed ||L-hat||.
BoundReport bound_structured(const ConfederateParts& parts, double epsH, double eps1, double epsC, double lhat);

}  // namespace confed
