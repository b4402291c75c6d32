#pragma once

// Degree-graded polynomial bases defined by a three-term recurrence
//
//   phi_j(x) = (alpha_j x + beta_j) phi_{j-1}(x) - gamma_j phi_{j-2}(x),
//   phi_0 = 1, phi_{-1} = 0.
//
// Coefficient vectors are ordered highest degree first: c[0] multiplies
// phi_{n-1} and c[n-1] multiplies phi_0, so p = phi_n + sum_k c[k] phi_{n-1-k}.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace confed {

enum class BasisKind { Monomial, MonomialShifted, Chebyshev1, Jacobi };

struct RecurrenceTriple {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct BasisSpec {
  BasisKind kind = BasisKind::Monomial;
  int degree = 0;
  double jacobi_alpha = 0.0;
  double jacobi_beta = 0.0;
  std::vector<RecurrenceTriple> rec;  // rec[j] for j = 1..n; rec[0] unused
  std::vector<double> nu;             // nu[j], j = 0..n
  double chi = 1.0;                   // nu[n] / nu[n-1]
  std::vector<double> d;              // symmetrizing scaling d_0..d_n; empty for monomial kinds
  // False when the Jacobi coefficient estimate used by the structured bound
  // is outside its hypothesis (alpha, beta >= 1/2).
  bool coefficient_bound_applies = true;

  [[nodiscard]] bool orthogonal() const { return kind == BasisKind::Chebyshev1 || kind == BasisKind::Jacobi; }
  [[nodiscard]] const RecurrenceTriple& triple(int j) const { return rec.at(static_cast<std::size_t>(j)); }
};

class BasisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BasisSpec make_basis(BasisKind kind, int n, double jacobi_alpha = 0.0, double jacobi_beta = 0.0);

/// Parses `monomial`, `monomial-shifted`, `chebyshev` or `jacobi:ALPHA:BETA`.
/// Jacobi parameters are restricted to (-1, 5].
BasisSpec parse_basis(const std::string& tag, int n);
std::string basis_tag(const BasisSpec& spec);

/// Recurrence triple of Jacobi(a, b) polynomials at index k >= 1.
RecurrenceTriple jacobi_triple(double a, double b, int k);

/// d_0..d_n: d_k scales the coefficient of phi_{n-k}; d_0 = d_n = 1.
std::vector<double> scaling_vector(const BasisSpec& spec);
/// Same as scaling_vector for Jacobi, from the norms of P_j^{(a,b)}.
std::vector<double> jacobi_scaling_closed_form(double a, double b, int n);

template <class T>
struct PhiValues {
  std::vector<T> phi;  // [phi_{n-1}(x), ..., phi_0(x)]
  T phi_n;
};

template <class T>
PhiValues<T> eval_phi(const BasisSpec& spec, T x) {
  const int n = spec.degree;
  std::vector<T> asc(static_cast<std::size_t>(n) + 1);
  asc[0] = T(1.0);
  T prev = T(0.0);
  for (int j = 1; j <= n; ++j) {
    const auto& t = spec.triple(j);
    const T cur = (T(t.alpha) * x + T(t.beta)) * asc[j - 1] - T(t.gamma) * prev;
    prev = asc[j - 1];
    asc[j] = cur;
  }
  PhiValues<T> out;
  out.phi.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.phi[k] = asc[n - 1 - k];
  out.phi_n = asc[n];
  if (spec.kind == BasisKind::MonomialShifted) out.phi_n = out.phi_n + T(1.0);
  return out;
}

/// p(x) = phi_n(x) + c^T Phi(x). Clenshaw for orthogonal kinds, Horner otherwise.
template <class T>
T eval_poly(const BasisSpec& spec, std::span<const double> c, T x) {
  const int n = spec.degree;
  if (static_cast<int>(c.size()) != n) throw BasisError("eval_poly: coefficient vector has wrong length");
  auto a = [&](int j) { return j == n ? 1.0 : c[static_cast<std::size_t>(n - 1 - j)]; };
  if (!spec.orthogonal()) {
    T acc = T(1.0);
    for (int j = n - 1; j >= 0; --j) acc = acc * x + T(a(j));
    if (spec.kind == BasisKind::MonomialShifted) acc = acc + T(1.0);
    return acc;
  }
  T b1 = T(0.0), b2 = T(0.0);
  for (int j = n; j >= 0; --j) {
    T b = T(a(j));
    if (j + 1 <= n) {
      const auto& t = spec.triple(j + 1);
      b = b + (T(t.alpha) * x + T(t.beta)) * b1;
    }
    if (j + 2 <= n) b = b - T(spec.triple(j + 2).gamma) * b2;
    b2 = b1;
    b1 = b;
  }
  return b1;
}

}  // namespace confed
