#include <cmath>
#include <numbers>
#include <random>

#include "confed/bounds.hpp"
#include "confed/recover.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace confed;
using std::numbers::pi;

TEST_CASE("char_value examples") {
  CHECK(char_value(Matrix<double>::identity(4), DoubleDouble(2.0), 1.0).to_double() == 1.0);
  const auto t3 = build_working(make_basis(BasisKind::Chebyshev1, 3), std::vector<double>(3, 0.0));
  const double v = char_value(assemble_dense(t3), DoubleDouble(0.5), t3.nu_n()).to_double();
  CHECK(v == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(char_value(Matrix<double>::identity(3), DoubleDouble(1.0), 1.0), SingularMatrixError);
  CHECK_THROWS_AS(char_value(Matrix<double>(2, 3), DoubleDouble(1.0), 1.0), std::invalid_argument);

  std::mt19937_64 gen(66);
  std::uniform_int_distribution<int> ud(-3, 3);
  for (int t = 0; t < 20; ++t) {
    Matrix<double> m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = ud(gen);
    // det(0 I - M) = det(M) for even order
    const long double ref = oracle::cofactor_det(testutil::nested(m));
    if (ref == 0.0L) continue;
    CHECK(char_value(m, DoubleDouble(0.0), 1.0).to_double() == static_cast<double>(ref));
  }

  // complex argument: det(i I - [[0,-1],[1,0]]) = i^2 + 1 = 0 is singular, use 2i instead: -4 + 1
  Matrix<double> rot(2, 2);
  rot(0, 1) = -1.0;
  rot(1, 0) = 1.0;
  const auto z = char_value(rot, ComplexDD(cplx(0.0, 2.0)), 1.0).to_complex();
  CHECK(std::abs(z - cplx(-3.0, 0.0)) < 1e-15);
}

TEST_CASE("monomial recovery from roots-of-unity values") {
  const int n = 4;
  std::vector<cplx> ones(n, 1.0);
  const auto a = recover_monomial(ones);
  for (int k = 0; k < n; ++k) CHECK(std::abs(a.coeffs[k] - (k == n - 1 ? 1.0 : 0.0)) < 1e-15);
  std::vector<cplx> lin;
  for (int j = 0; j < n; ++j) lin.push_back(std::polar(1.0, 2 * pi * j / n));
  const auto b = recover_monomial(lin);
  for (int k = 0; k < n; ++k) CHECK(std::abs(b.coeffs[k] - (k == n - 2 ? 1.0 : 0.0)) < 1e-15);
  CHECK(b.residual < 1e-15);
  CHECK_THROWS_AS(recover_monomial(std::vector<cplx>{}), std::invalid_argument);
}

TEST_CASE("companion end-to-end against the symbolic determinant") {
  const int n = 6;
  std::mt19937_64 gen(13);
  SplitMix64 rng(13);
  for (int t = 0; t < 5; ++t) {
    const auto c = testutil::normal_vector(gen, n);
    const auto parts = build_confederate(make_basis(BasisKind::Monomial, n), c);
    const auto pert = random_perturbation(rng, n, 1e-8, 1e-8, 1e-8, PerturbStructure::Dense);
    const auto dp = backward_error(parts, pert);

    std::vector<std::vector<long double>> m0(n, std::vector<long double>(n)), m1 = m0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const long double ui = parts.u[i], wj = parts.w[j];
        m0[i][j] = parts.H(i, j) + ui * wj;
        m1[i][j] = parts.H(i, j) + static_cast<long double>(pert.deltaH(i, j)) +
                   (ui + pert.deltaU[i]) * (wj + pert.deltaW[j]);
      }
    const auto p0 = oracle::charpoly_cofactor(m0);
    const auto p1 = oracle::charpoly_cofactor(m1);
    CHECK(std::abs(static_cast<double>(p1[n] - p0[n])) < 1e-15);
    for (int m = 0; m < n; ++m) CHECK(std::abs(dp.coeffs[n - 1 - m] - static_cast<double>(p1[m] - p0[m])) <= 1e-12);
    CHECK(dp.norm2 <= dp.valuesInf + 1e-12);
    CHECK(dp.residual <= 1e-8 * (1.0 + dp.normInf));
  }
}

TEST_CASE("interpolation reproduces a basis element") {
  const int n = 5;
  const auto parts = build_working(make_basis(BasisKind::Chebyshev1, n), std::vector<double>(n, 0.3));
  const auto ns = node_sets(parts.basis);
  const auto nodes = ns.real_nodes();
  REQUIRE(nodes.size() == static_cast<std::size_t>(n + 1));
  for (int k = 0; k < n; ++k) {
    std::vector<double> values;
    for (double x : nodes) values.push_back(parts.phi(x).phi[k]);
    const auto dp = recover_orthogonal(parts, nodes, values);
    for (int j = 0; j < n; ++j) CHECK(std::abs(dp.coeffs[j] - (j == k ? 1.0 : 0.0)) < 1e-14);
    CHECK(dp.residual < 1e-14);
  }
  // T_2 in plain Chebyshev coefficients
  std::vector<double> values;
  for (double x : nodes) values.push_back(std::cos(2 * std::acos(x)));
  const auto dp = recover_orthogonal(parts, nodes, values);
  for (int j = 0; j < n; ++j) CHECK(std::abs(dp.unscaledCoeffs[j] - (j == n - 1 - 2 ? 1.0 : 0.0)) < 1e-14);

  CHECK_THROWS_AS(recover_orthogonal(parts, std::span<const double>(nodes).first(n), std::span<const double>(values).first(n)),
                  std::invalid_argument);
  std::vector<double> dup = nodes;
  dup[1] = dup[0];
  CHECK_THROWS_AS(recover_orthogonal(parts, dup, values), std::runtime_error);
  CHECK(vandermonde_condition(parts, nodes) < 100.0);
}

TEST_CASE("zero perturbation recovers zero") {
  SplitMix64 rng(1);
  for (const char* tag : {"monomial", "monomial-shifted", "chebyshev", "jacobi:0:0", "jacobi:2:0.5"}) {
    const auto parts = build_working(parse_basis(tag, 7), std::vector<double>{1, -2, 3, 0.5, -1, 2, 4});
    const auto p = random_perturbation(rng, 7, 0.0, 0.0, 0.0, PerturbStructure::Dense);
    const auto dp = backward_error(parts, p);
    CHECK(dp.normInf == 0.0);
    CHECK(dp.residual == 0.0);
  }
}

TEST_CASE("recovery properties under random perturbations") {
  SplitMix64 rng(2);
  std::mt19937_64 gen(2);
  for (const char* tag : {"monomial", "monomial-shifted", "chebyshev", "jacobi:0:0", "jacobi:0.5:1.5", "jacobi:-0.5:-0.5"}) {
    for (int n : {3, 5, 8, 16, 24}) {
      const auto parts = build_working(parse_basis(tag, n), testutil::normal_vector(gen, n, 3.0));
      const auto ns = node_sets(parts.basis);
      for (int t = 0; t < 5; ++t) {
        const auto p = random_perturbation(rng, n, 1e-7, 1e-7, 1e-7, PerturbStructure::Dense);
        const auto dp = backward_error(parts, p);
        CHECK(dp.residual <= 1e-8 * (1.0 + dp.normInf));
        // evaluate the recovered dp back at the nodes
        if (ns.real) {
          const auto nodes = ns.real_nodes();
          const auto vals = delta_p_values(parts, p, std::span<const double>(nodes));
          for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto ph = parts.phi(nodes[i]);
            double s = 0;
            for (int k = 0; k < n; ++k) s += dp.coeffs[k] * ph.phi[k];
            CHECK(std::abs(s - vals[i]) <= 1e-10 * dp.valuesInf);
          }
        } else {
          const auto vals = delta_p_values(parts, p, std::span<const cplx>(ns.nodes));
          for (std::size_t i = 0; i < ns.nodes.size(); ++i) {
            cplx s = 0;
            for (int k = 0; k < n; ++k) s += dp.coeffs[k] * std::pow(ns.nodes[i], n - 1 - k);
            CHECK(std::abs(s - vals[i]) <= 1e-10 * dp.valuesInf);
          }
          CHECK(dp.norm2 <= dp.valuesInf + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("doubling the perturbation doubles dp") {
  SplitMix64 rng(3);
  const int n = 6;
  const auto parts = build_working(make_basis(BasisKind::Chebyshev1, n), random_unbalanced_poly(rng, n));
  for (int t = 0; t < 10; ++t) {
    auto p = random_perturbation(rng, n, 1e-9, 1e-9, 1e-9, PerturbStructure::Dense);
    const auto nodes = node_sets(parts.basis).real_nodes();
    const auto a = delta_p_values(parts, p, std::span<const double>(nodes));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) p.deltaH(i, j) *= 2;
    for (auto& x : p.deltaU) x *= 2;
    for (auto& x : p.deltaW) x *= 2;
    const auto b = delta_p_values(parts, p, std::span<const double>(nodes));
    double scale = 0;
    for (double x : a) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(b[i] - 2 * a[i]) <= 1e-3 * scale);
  }
}
