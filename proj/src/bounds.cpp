#include "confed/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "confed/dd.hpp"
#include "confed/eig.hpp"
#include "confed/extended_lu.hpp"

namespace confed {

std::vector<double> NodeSet::real_nodes() const {
  std::vector<double> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = nodes[i].real();
  return out;
}

std::vector<double> NodeSet::real_roots() const {
  std::vector<double> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) out[i] = roots[i].real();
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

// exp(2 pi i k / n) with the angle reduced first.
cplx unit_root(long k, long n) {
  k %= n;
  if (k < 0) k += n;
  const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(t), std::sin(t)};
}

}  // namespace

NodeSet node_sets(const BasisSpec& spec) {
  const int n = spec.degree;
  NodeSet ns;
  switch (spec.kind) {
    case BasisKind::Chebyshev1:
      ns.real = true;
      // sin form keeps the middle node exactly zero.
      for (int j = 0; j <= n; ++j) ns.nodes.emplace_back(std::sin((n - 2 * j) * kPi / (2.0 * n)), 0.0);
      for (int j = 0; j < n; ++j) ns.roots.emplace_back(std::sin((n - 2 * j - 1) * kPi / (2.0 * n)), 0.0);
      break;
    case BasisKind::Jacobi: {
      ns.real = true;
      const double a = spec.jacobi_alpha, b = spec.jacobi_beta;
      ns.nodes.emplace_back(1.0, 0.0);
      if (n >= 2) {
        const auto rec = jacobi_recurrence(a + 1.0, b + 1.0, n - 1);
        const auto q = golub_welsch(rec, n - 1, jacobi_mu0(a + 1.0, b + 1.0));
        if (!q.converged) throw std::runtime_error("node_sets: Golub-Welsch did not converge");
        for (auto it = q.nodes.rbegin(); it != q.nodes.rend(); ++it) ns.nodes.emplace_back(*it, 0.0);
      }
      ns.nodes.emplace_back(-1.0, 0.0);
      const auto r = golub_welsch(spec.rec, n, jacobi_mu0(a, b));
      if (!r.converged) throw std::runtime_error("node_sets: Golub-Welsch did not converge");
      for (auto it = r.nodes.rbegin(); it != r.nodes.rend(); ++it) ns.roots.emplace_back(*it, 0.0);
      break;
    }
    case BasisKind::Monomial:
    case BasisKind::MonomialShifted:
      for (int j = 0; j < n; ++j) ns.nodes.push_back(unit_root(j, n));
      if (spec.kind == BasisKind::MonomialShifted) {
        // exp(i pi (2j+1)/n) = exp(2 pi i (2j+1) / 2n)
        for (int j = 0; j < n; ++j) ns.roots.push_back(unit_root(2 * j + 1, 2L * n));
      } else {
        ns.roots.assign(static_cast<std::size_t>(n), cplx(0.0, 0.0));
      }
      break;
  }
  return ns;
}

MS ms_constants(std::span<const cplx> roots, cplx xi) {
  MS out;
  for (const cplx& r : roots) {
    const double dist = std::abs(xi - r);
    if (dist == 0.0) throw CoincidentNodeError("ms_constants: evaluation point coincides with a root");
    const double inv = 1.0 / dist;
    out.M = std::max(out.M, inv);
    out.S += inv;
  }
  return out;
}

MS ms_constants(std::span<const double> roots, double xi) {
  MS out;
  for (double r : roots) {
    const double dist = std::abs(xi - r);
    if (dist == 0.0) throw CoincidentNodeError("ms_constants: evaluation point coincides with a root");
    const double inv = 1.0 / dist;
    out.M = std::max(out.M, inv);
    out.S += inv;
  }
  return out;
}

Gamma gamma_pointwise(const ConfederateParts& parts, cplx xi, std::span<const cplx> roots) {
  Gamma g;
  const MS ms = ms_constants(roots, xi);
  g.M = ms.M;
  g.S = ms.S;
  const auto ph = parts.phi(xi);
  double phi2 = 0.0;
  for (const cplx& v : ph.phi) phi2 += std::norm(v);
  const double phin = std::abs(ph.phi_n);
  const double wn = norm2(parts.w);
  g.gamma1 = ms.M * phin * wn;
  g.gammac = parts.chi_eff * std::sqrt(phi2);
  g.gammaH = ms.S * phin + g.gammac * (ms.M + ms.S) * wn;
  return g;
}

double bound_monomial(int n, double normC, double epsH, double eps1, double epsC) {
  if (n < 2) throw std::invalid_argument("bound_monomial: n must be at least 2");
  const double nn = n;
  const double sq = std::sqrt(nn);
  return nn * normC * eps1 + sq * epsC + nn * std::log(nn / 2.0) * epsH +
         (nn * sq / 2.0) * (1.0 + std::log(nn / 2.0 + 0.5)) * normC * epsH;
}

double bound_cheb_corollary(int n, double normC, double epsH, double eps1, double epsC) {
  if (n < 2) throw std::invalid_argument("bound_cheb_corollary: n must be at least 2");
  const double nn = n;
  const double sq = std::sqrt(nn);
  return (6.0 * normC * eps1 + 2.0 * sq * epsC + (5.0 + 16.0 * sq * normC) * epsH) * nn * nn;
}

Matrix<double> lagrange_matrix(const ConfederateParts& parts, std::span<const double> nodes) {
  const std::size_t n = static_cast<std::size_t>(parts.n());
  if (nodes.size() != n + 1) throw std::invalid_argument("lagrange_matrix: need n+1 nodes");
  Matrix<DoubleDouble> v(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const auto ph = parts.phi(DoubleDouble(nodes[i]));
    for (std::size_t k = 0; k < n; ++k) v(i, k) = ph.phi[k];
    v(i, n) = ph.phi_n;
  }
  const auto inv = PivotedLU<DoubleDouble>(std::move(v), Pivoting::Complete).inverse();
  Matrix<double> out(n, n + 1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= n; ++j) out(k, j) = inv(k, j).to_double();
  return out;
}

Matrix<cplx> lagrange_matrix(const ConfederateParts& parts, std::span<const cplx> nodes) {
  const std::size_t n = static_cast<std::size_t>(parts.n());
  if (nodes.size() != n) throw std::invalid_argument("lagrange_matrix: need n nodes");
  Matrix<ComplexDD> v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ph = parts.phi(ComplexDD(nodes[i]));
    for (std::size_t k = 0; k < n; ++k) v(i, k) = ph.phi[k];
  }
  const auto inv = PivotedLU<ComplexDD>(std::move(v), Pivoting::Complete).inverse();
  Matrix<cplx> out(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out(k, j) = inv(k, j).to_complex();
  return out;
}

double lagrange_inf_norm(const ConfederateParts& parts) {
  const NodeSet ns = node_sets(parts.basis);
  if (ns.real) return inf_norm(lagrange_matrix(parts, std::span<const double>(ns.real_nodes())));
  return inf_norm(lagrange_matrix(parts, std::span<const cplx>(ns.nodes)));
}

double jacobi_mu(double a, double b, int m) {
  if (m < 1) throw std::invalid_argument("jacobi_mu: m must be positive");
  const auto rec = jacobi_recurrence(a + 1.0, b + 1.0, m);
  const auto q = golub_welsch(rec, m, jacobi_mu0(a + 1.0, b + 1.0));
  if (!q.converged) throw std::runtime_error("jacobi_mu: Golub-Welsch did not converge");
  double mu = 0.0;
  for (int s = 0; s < m; ++s) mu = std::max(mu, std::abs(q.weights[s] / (1.0 - q.nodes[s] * q.nodes[s])));
  return mu;
}

double jacobi_cn(double a, double b, int n, double mu) {
  const double nn = n;
  const double top = std::max(a, b);
  const double x = a + b + nn - 1.0;
  const double log_binom = std::lgamma(x + 1.0) - std::lgamma(top + 1.0) - std::lgamma(x - top + 1.0);
  const double log_term = std::log(nn - 1.0) + std::log(mu) + std::log(2.0 * nn + a + b + 1.0) -
                          (a + b + 1.0) * std::log(2.0) + log_binom;
  if (log_term > 700.0) throw OverflowError("jacobi_cn: constant overflows double range");
  return 12.0 + std::exp(log_term);
}

JacobiConstants jacobi_constants(double a, double b, int n) {
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("jacobi_constants: parameters must exceed -1");
  if (n < 3) throw std::invalid_argument("jacobi_constants: n must be at least 3");
  JacobiConstants jc;
  jc.mu = jacobi_mu(a, b, n - 1);
  jc.muRatio = jc.mu * (n + a + 0.5) / kPi;
  jc.Cn = jacobi_cn(a, b, n, jc.mu);
  const BasisSpec spec = make_basis(BasisKind::Jacobi, n, a, b);
  const NodeSet ns = node_sets(spec);
  const auto roots = ns.real_roots();
  const double n2 = static_cast<double>(n) * n;
  for (double xi : ns.real_nodes()) {
    const MS ms = ms_constants(std::span<const double>(roots), xi);
    jc.etaM = std::max(jc.etaM, ms.M / n2);
    jc.etaS = std::max(jc.etaS, ms.S / (n2 * n));
  }
  const auto dfirst = spec.d.begin() + 1;
  jc.maxD = *std::max_element(dfirst, spec.d.end());
  jc.etaD = jc.maxD / *std::min_element(dfirst, spec.d.end());
  return jc;
}

BoundReport bound_structured(const ConfederateParts& parts, double epsH, double eps1, double epsC) {
  return bound_structured(parts, epsH, eps1, epsC, lagrange_inf_norm(parts));
}

BoundReport bound_structured(const ConfederateParts& parts, double epsH, double eps1, double epsC, double lhat) {
  const BasisSpec& spec = parts.basis;
  const bool normal = (spec.orthogonal() && parts.scaled) || spec.kind == BasisKind::MonomialShifted;
  if (!normal) throw std::invalid_argument("bound_structured: H must be normal (scaled orthogonal or shifted monomial)");
  const NodeSet ns = node_sets(spec);
  BoundReport rep;
  rep.LhatInfNorm = lhat;
  for (const cplx& xi : ns.nodes) {
    NodeBound nb;
    nb.node = xi;
    nb.gamma = gamma_pointwise(parts, xi, ns.roots);
    nb.pointwise = nb.gamma.gamma1 * eps1 + nb.gamma.gammac * epsC + nb.gamma.gammaH * epsH;
    rep.maxPointwise = std::max(rep.maxPointwise, nb.pointwise);
    rep.perNode.push_back(nb);
  }
  rep.aggregate = rep.LhatInfNorm * rep.maxPointwise;
  const int n = spec.degree;
  const double wn = norm2(parts.w);
  switch (spec.kind) {
    case BasisKind::MonomialShifted: rep.closedForm = bound_monomial(n, wn, epsH, eps1, epsC); break;
    case BasisKind::Chebyshev1:
      rep.closedForm = bound_cheb_corollary(n, parts.chi_eff * wn, epsH, eps1, parts.chi_eff * epsC);
      break;
    case BasisKind::Jacobi: {
      const double mu = jacobi_mu(spec.jacobi_alpha, spec.jacobi_beta, n - 1);
      const double maxD = *std::max_element(parts.dscale.begin(), parts.dscale.end());
      try {
        rep.closedForm = maxD * jacobi_cn(spec.jacobi_alpha, spec.jacobi_beta, n, mu) * rep.maxPointwise;
      } catch (const OverflowError&) {
        rep.closedForm = std::numeric_limits<double>::infinity();
      }
      break;
    }
    case BasisKind::Monomial: break;
  }
  return rep;
}

}  // namespace confed
