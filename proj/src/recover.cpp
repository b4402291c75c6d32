#include "confed/recover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "confed/bounds.hpp"

namespace confed {

namespace {

template <class S, class X>
std::vector<S> dp_values_impl(const ConfederateParts& parts, const Perturbation& pert, std::span<const X> nodes) {
  const auto c0 = assemble_extended(parts);
  const auto c1 = apply(parts, pert);
  const double nu = parts.nu_n();
  std::vector<S> out;
  out.reserve(nodes.size());
  for (const X& xi : nodes) {
    const S x(xi);
    out.push_back(char_value(c1, x, nu) - char_value(c0, x, nu));
  }
  return out;
}

void fill_norms(DeltaP& dp, std::span<const double> dscale) {
  dp.normInf = norm_inf(dp.coeffs);
  dp.norm2 = norm2(dp.coeffs);
  dp.unscaledCoeffs.resize(dp.coeffs.size());
  for (std::size_t k = 0; k < dp.coeffs.size(); ++k)
    dp.unscaledCoeffs[k] = dscale.empty() ? dp.coeffs[k] : dp.coeffs[k] / dscale[k];
  dp.unscaledInf = norm_inf(dp.unscaledCoeffs);
  dp.unscaled2 = norm2(dp.unscaledCoeffs);
}

}  // namespace

std::vector<double> delta_p_values(const ConfederateParts& parts, const Perturbation& pert,
                                   std::span<const double> nodes) {
  const auto v = dp_values_impl<DoubleDouble>(parts, pert, nodes);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
  return out;
}

std::vector<cplx> delta_p_values(const ConfederateParts& parts, const Perturbation& pert,
                                 std::span<const cplx> nodes) {
  const auto v = dp_values_impl<ComplexDD>(parts, pert, nodes);
  std::vector<cplx> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_complex();
  return out;
}

DeltaP recover_monomial(std::span<const cplx> values) {
  const long n = static_cast<long>(values.size());
  if (n < 1) throw std::invalid_argument("recover_monomial: need at least one value");
  DeltaP dp;
  dp.coeffs.resize(static_cast<std::size_t>(n));
  for (const cplx& v : values) dp.valuesInf = std::max(dp.valuesInf, std::abs(v));
  double imag_max = 0.0;
  // a_m = (1/n) sum_j v_j exp(-2 pi i j m / n); coefficient of x^m sits at index n-1-m.
  for (long m = 0; m < n; ++m) {
    cplx acc(0.0, 0.0);
    for (long j = 0; j < n; ++j) {
      const long k = (j * m) % n;
      const double t = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      acc += values[static_cast<std::size_t>(j)] * cplx(std::cos(t), std::sin(t));
    }
    acc /= static_cast<double>(n);
    dp.coeffs[static_cast<std::size_t>(n - 1 - m)] = acc.real();
    imag_max = std::max(imag_max, std::abs(acc.imag()));
  }
  dp.residual = imag_max;
  fill_norms(dp, {});
  return dp;
}

double vandermonde_condition(const ConfederateParts& parts, std::span<const double> nodes) {
  const std::size_t n = static_cast<std::size_t>(parts.n());
  Matrix<double> v(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const auto ph = parts.phi(nodes[i]);
    for (std::size_t k = 0; k < n; ++k) v(i, k) = ph.phi[k];
    v(i, n) = ph.phi_n;
  }
  const auto inv = PivotedLU<DoubleDouble>(promote<DoubleDouble>(v), Pivoting::Complete).inverse();
  Matrix<double> invd(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) invd(i, j) = inv(i, j).to_double();
  return inf_norm(v) * inf_norm(invd);
}

DeltaP recover_orthogonal(const ConfederateParts& parts, std::span<const double> nodes,
                          std::span<const double> values) {
  const std::size_t n = static_cast<std::size_t>(parts.n());
  if (nodes.size() != n + 1 || values.size() != n + 1)
    throw std::invalid_argument("recover_orthogonal: need n+1 nodes and values");
  Matrix<DoubleDouble> v(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const auto ph = parts.phi(DoubleDouble(nodes[i]));
    for (std::size_t k = 0; k < n; ++k) v(i, k) = ph.phi[k];
    v(i, n) = ph.phi_n;
  }
  const PivotedLU<DoubleDouble> lu(std::move(v), Pivoting::Complete);
  if (lu.pivot_ratio() > 1e14) throw RecoveryError("recover_orthogonal: interpolation matrix is numerically singular");
  std::vector<DoubleDouble> rhs(values.begin(), values.end());
  const auto x = lu.solve(rhs);
  DeltaP dp;
  dp.coeffs.resize(n);
  for (std::size_t k = 0; k < n; ++k) dp.coeffs[k] = x[k].to_double();
  dp.residual = std::abs(x[n].to_double());
  dp.valuesInf = norm_inf(values);
  fill_norms(dp, parts.dscale);
  return dp;
}

DeltaP backward_error(const ConfederateParts& parts, const Perturbation& pert) {
  const NodeSet ns = node_sets(parts.basis);
  if (ns.real) {
    const auto nodes = ns.real_nodes();
    const auto values = delta_p_values(parts, pert, std::span<const double>(nodes));
    return recover_orthogonal(parts, nodes, values);
  }
  const auto values = delta_p_values(parts, pert, std::span<const cplx>(ns.nodes));
  return recover_monomial(values);
}

}  // namespace confed
