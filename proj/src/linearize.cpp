#include "confed/linearize.hpp"

#include <cmath>
#include <stdexcept>

namespace confed {

std::vector<double> ConfederateParts::unscaled_c() const {
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k] / dscale[k];
  return out;
}

ConfederateParts build_confederate(const BasisSpec& spec, std::span<const double> c) {
  const int n = spec.degree;
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("build_confederate: coefficient vector has wrong length");
  ConfederateParts parts;
  parts.basis = spec;
  parts.H = Matrix<double>(n, n);
  // Row k (0-based) expresses x phi_{n-1-k} through the recurrence of index m = n-k.
  for (int k = 0; k < n; ++k) {
    const auto& t = spec.triple(n - k);
    if (k > 0) parts.H(k, k - 1) = 1.0 / t.alpha;
    parts.H(k, k) = -t.beta / t.alpha;
    if (k + 1 < n) parts.H(k, k + 1) = t.gamma / t.alpha;
  }
  if (spec.kind == BasisKind::MonomialShifted) {
    parts.H(0, n - 1) = -1.0;
    parts.structure = HStructure::UnitaryPlusRankOne;
  }
  parts.chi_eff = spec.chi;
  parts.c.assign(c.begin(), c.end());
  parts.u.assign(static_cast<std::size_t>(n), 0.0);
  parts.u[0] = 1.0;
  parts.w.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) parts.w[k] = -c[k] / parts.chi_eff;
  parts.dscale.assign(static_cast<std::size_t>(n), 1.0);
  return parts;
}

ConfederateParts symmetrize(const ConfederateParts& parts) {
  const BasisSpec& spec = parts.basis;
  if (!spec.orthogonal()) throw std::invalid_argument("symmetrize: only defined for orthogonal bases");
  if (parts.scaled) return parts;
  const int n = spec.degree;
  ConfederateParts out = parts;
  out.scaled = true;
  out.structure = HStructure::SymmetricTridiagonal;
  out.H = Matrix<double>(n, n);
  for (int k = 0; k < n; ++k) {
    const auto& t = spec.triple(n - k);
    out.H(k, k) = -t.beta / t.alpha;
    if (k + 1 < n) {
      const double off = std::sqrt(t.gamma / (t.alpha * spec.triple(n - k - 1).alpha));
      out.H(k, k + 1) = off;
      out.H(k + 1, k) = off;
    }
  }
  out.dscale.assign(spec.d.begin() + 1, spec.d.end());
  out.chi_eff = spec.chi * out.dscale.front();
  for (int k = 0; k < n; ++k) {
    out.c[k] = parts.c[k] * out.dscale[k];
    out.w[k] = -out.c[k] / out.chi_eff;
  }
  return out;
}

ConfederateParts build_companion_unitary(std::span<const double> c) {
  const int n = static_cast<int>(c.size());
  std::vector<double> shifted(c.begin(), c.end());
  if (n >= 1) shifted.back() -= 1.0;
  return build_confederate(make_basis(BasisKind::MonomialShifted, n), shifted);
}

Matrix<double> assemble_dense(const ConfederateParts& parts) {
  Matrix<double> m = parts.H;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += parts.u[i] * parts.w[j];
  return m;
}

ConfederateParts build_working(const BasisSpec& spec, std::span<const double> c) {
  auto parts = build_confederate(spec, c);
  if (spec.orthogonal()) return symmetrize(parts);
  return parts;
}

}  // namespace confed
