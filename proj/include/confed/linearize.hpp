#pragma once

// Confederate linearizations stored as C = H + u w^T with u = e_1.

#include <span>
#include <vector>

#include "confed/basis.hpp"
#include "confed/matrix.hpp"

namespace confed {

enum class HStructure { Hessenberg, SymmetricTridiagonal, UnitaryPlusRankOne };

struct ConfederateParts {
  Matrix<double> H;
  HStructure structure = HStructure::Hessenberg;
  std::vector<double> u;  // e_1
  std::vector<double> w;  // -c / chi_eff
  double chi_eff = 1.0;
  BasisSpec basis;
  bool scaled = false;
  std::vector<double> c;       // coefficients in the working basis
  std::vector<double> dscale;  // d_1..d_n when scaled, ones otherwise

  [[nodiscard]] int n() const { return basis.degree; }

  /// Working-basis Phi: phi_{n-k} / d_k for the scaled form.
  template <class T>
  PhiValues<T> phi(T x) const {
    auto v = eval_phi(basis, x);
    for (std::size_t k = 0; k < v.phi.size(); ++k) v.phi[k] = v.phi[k] / T(dscale[k]);
    return v;
  }

  /// Leading coefficients matching the working basis (nu_{n-1} / d_1 when scaled).
  [[nodiscard]] double nu_n() const { return basis.nu.back(); }
  [[nodiscard]] double nu_n_minus_1() const { return basis.nu[basis.nu.size() - 2] / dscale.front(); }

  /// Coefficients with respect to the unscaled basis.
  [[nodiscard]] std::vector<double> unscaled_c() const;
};

ConfederateParts build_confederate(const BasisSpec& spec, std::span<const double> c);
ConfederateParts symmetrize(const ConfederateParts& parts);
/// Monomial coefficients c of x^n + c^T [x^{n-1},...,1] rewritten over the
/// shifted basis so that H is orthogonal.
ConfederateParts build_companion_unitary(std::span<const double> c);
Matrix<double> assemble_dense(const ConfederateParts& parts);

/// Scaled form for orthogonal kinds, unitary-plus-rank-one for monomial input.
/// This is what the experiments and the root finder use.
ConfederateParts build_working(const BasisSpec& spec, std::span<const double> c);

}  // namespace confed
