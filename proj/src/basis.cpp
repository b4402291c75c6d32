#include "confed/basis.hpp"

#include <cmath>
#include <sstream>

namespace confed {

RecurrenceTriple jacobi_triple(double a, double b, int k) {
  if (k < 1) throw BasisError("jacobi_triple: k must be >= 1");
  if (k == 1) {
    // The general formulas have removable 0/0 factors at k = 1 when a+b is 0 or -1.
    return {(a + b + 2.0) / 2.0, (a - b) / 2.0, 0.0};
  }
  const double kk = k;
  const double s = 2.0 * kk + a + b;
  RecurrenceTriple t;
  t.alpha = s * (s - 1.0) / (2.0 * kk * (kk + a + b));
  t.beta = (a * a - b * b) * (s - 1.0) / (2.0 * kk * (kk + a + b) * (s - 2.0));
  t.gamma = (kk + a - 1.0) * (kk + b - 1.0) * s / (kk * (kk + a + b) * (s - 2.0));
  return t;
}

BasisSpec make_basis(BasisKind kind, int n, double jacobi_alpha, double jacobi_beta) {
  if (n < 2) throw BasisError("basis degree must be at least 2");
  BasisSpec spec;
  spec.kind = kind;
  spec.degree = n;
  spec.rec.assign(static_cast<std::size_t>(n) + 1, RecurrenceTriple{});
  switch (kind) {
    case BasisKind::Monomial:
    case BasisKind::MonomialShifted:
      for (int j = 1; j <= n; ++j) spec.rec[j] = {1.0, 0.0, 0.0};
      break;
    case BasisKind::Chebyshev1:
      spec.rec[1] = {1.0, 0.0, 1.0};
      for (int j = 2; j <= n; ++j) spec.rec[j] = {2.0, 0.0, 1.0};
      break;
    case BasisKind::Jacobi:
      if (!(jacobi_alpha > -1.0) || !(jacobi_beta > -1.0))
        throw BasisError("Jacobi parameters must be greater than -1");
      spec.jacobi_alpha = jacobi_alpha;
      spec.jacobi_beta = jacobi_beta;
      spec.coefficient_bound_applies = jacobi_alpha >= 0.5 && jacobi_beta >= 0.5;
      for (int j = 1; j <= n; ++j) spec.rec[j] = jacobi_triple(jacobi_alpha, jacobi_beta, j);
      break;
  }
  spec.nu.assign(static_cast<std::size_t>(n) + 1, 1.0);
  for (int j = 1; j <= n; ++j) spec.nu[j] = spec.rec[j].alpha * spec.nu[j - 1];
  spec.chi = spec.nu[n] / spec.nu[n - 1];
  if (spec.orthogonal()) spec.d = scaling_vector(spec);
  return spec;
}

std::vector<double> scaling_vector(const BasisSpec& spec) {
  if (!spec.orthogonal()) throw BasisError("scaling_vector: only defined for orthogonal bases");
  const int n = spec.degree;
  std::vector<double> d(static_cast<std::size_t>(n) + 1, 1.0);
  // d_k belongs to phi_{n-k}; with m = n-k+1, d_k^2 = (alpha_1/alpha_m) prod_{i=2..m} gamma_i.
  double prod = 1.0;
  for (int m = 1; m <= n; ++m) {
    if (m >= 2) prod *= spec.triple(m).gamma;
    d[n - m + 1] = std::sqrt(spec.triple(1).alpha / spec.triple(m).alpha * prod);
  }
  d[0] = 1.0;
  return d;
}

std::vector<double> jacobi_scaling_closed_form(double a, double b, int n) {
  std::vector<double> d(static_cast<std::size_t>(n) + 1, 1.0);
  // d for phi_j is sqrt(h_j / h_0) with h_j the squared weighted norm of P_j.
  const double log_h0_part = std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0);
  for (int j = 1; j <= n - 1; ++j) {
    const double jj = j;
    const double log_hj_part = std::lgamma(jj + a + 1.0) + std::lgamma(jj + b + 1.0) - std::log(2.0 * jj + a + b + 1.0) -
                               std::lgamma(jj + 1.0) - std::lgamma(jj + a + b + 1.0);
    d[n - j] = std::exp(0.5 * (log_hj_part - log_h0_part));
  }
  return d;
}

std::string basis_tag(const BasisSpec& spec) {
  switch (spec.kind) {
    case BasisKind::Monomial: return "monomial";
    case BasisKind::MonomialShifted: return "monomial-shifted";
    case BasisKind::Chebyshev1: return "chebyshev";
    case BasisKind::Jacobi: {
      std::ostringstream os;
      os.precision(17);
      os << "jacobi:" << spec.jacobi_alpha << ':' << spec.jacobi_beta;
      return os.str();
    }
  }
  return "unknown";
}

namespace {

double parse_jacobi_param(const std::string& s, const std::string& tag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw BasisError("malformed basis '" + tag + "'");
  }
  if (used != s.size()) throw BasisError("malformed basis '" + tag + "'");
  if (!(v > -1.0) || v > 5.0) throw BasisError("Jacobi parameters must lie in (-1, 5]: '" + tag + "'");
  return v;
}

}  // namespace

BasisSpec parse_basis(const std::string& tag, int n) {
  if (tag == "monomial") return make_basis(BasisKind::Monomial, n);
  if (tag == "monomial-shifted") return make_basis(BasisKind::MonomialShifted, n);
  if (tag == "chebyshev") return make_basis(BasisKind::Chebyshev1, n);
  if (tag.rfind("jacobi:", 0) == 0) {
    const std::string rest = tag.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw BasisError("malformed basis '" + tag + "', expected jacobi:ALPHA:BETA");
    const double a = parse_jacobi_param(rest.substr(0, colon), tag);
    const double b = parse_jacobi_param(rest.substr(colon + 1), tag);
    return make_basis(BasisKind::Jacobi, n, a, b);
  }
  throw BasisError("unknown basis '" + tag + "'");
}

}  // namespace confed
