#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "confed/basis.hpp"
#include "confed/linearize.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace confed;
using std::numbers::pi;

TEST_CASE("Chebyshev recurrence coefficients") {
  const auto s = make_basis(BasisKind::Chebyshev1, 5);
  CHECK(s.triple(1).alpha == 1.0);
  for (int k = 2; k <= 5; ++k) {
    CHECK(s.triple(k).alpha == 2.0);
    CHECK(s.triple(k).gamma == 1.0);
  }
  for (int k = 1; k <= 5; ++k) CHECK(s.triple(k).beta == 0.0);
  CHECK(s.chi == 2.0);
  CHECK(s.nu[5] == 16.0);
}

TEST_CASE("monomial basis") {
  const auto s = make_basis(BasisKind::Monomial, 4);
  for (int k = 1; k <= 4; ++k) {
    CHECK(s.triple(k).alpha == 1.0);
    CHECK(s.triple(k).beta == 0.0);
    CHECK(s.triple(k).gamma == 0.0);
  }
  for (double v : s.nu) CHECK(v == 1.0);
  CHECK(s.chi == 1.0);
  CHECK(s.d.empty());
}

TEST_CASE("Legendre triple from the Jacobi formulas") {
  const auto s = make_basis(BasisKind::Jacobi, 6, 0.0, 0.0);
  CHECK(s.triple(2).alpha == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s.triple(2).beta == 0.0);
  CHECK(s.triple(2).gamma == doctest::Approx(0.5).epsilon(1e-15));
  for (int k = 2; k <= 6; ++k) {
    CHECK(s.triple(k).alpha == doctest::Approx((2.0 * k - 1) / k).epsilon(1e-15));
    CHECK(s.triple(k).gamma == doctest::Approx((k - 1.0) / k).epsilon(1e-15));
  }
}

TEST_CASE("degree and parameter checks") {
  CHECK_THROWS_AS(make_basis(BasisKind::Chebyshev1, 1), BasisError);
  CHECK_THROWS_AS(make_basis(BasisKind::Jacobi, 4, -1.0, 0.0), BasisError);
  CHECK_THROWS_AS(make_basis(BasisKind::Jacobi, 4, 0.0, -1.5), BasisError);
  CHECK_NOTHROW(make_basis(BasisKind::Jacobi, 4, -0.99, -0.99));
  CHECK_FALSE(make_basis(BasisKind::Jacobi, 4, 0.0, 0.0).coefficient_bound_applies);
  CHECK(make_basis(BasisKind::Jacobi, 4, 0.5, 1.0).coefficient_bound_applies);
}

TEST_CASE("basis tags") {
  CHECK(parse_basis("monomial", 3).kind == BasisKind::Monomial);
  CHECK(parse_basis("monomial-shifted", 3).kind == BasisKind::MonomialShifted);
  CHECK(parse_basis("chebyshev", 3).kind == BasisKind::Chebyshev1);
  const auto j = parse_basis("jacobi:0.5:-0.25", 3);
  CHECK(j.kind == BasisKind::Jacobi);
  CHECK(j.jacobi_alpha == 0.5);
  CHECK(j.jacobi_beta == -0.25);
  CHECK(basis_tag(j) == "jacobi:0.5:-0.25");
  CHECK_THROWS_AS(parse_basis("jacobi:1", 3), BasisError);
  CHECK_THROWS_AS(parse_basis("jacobi:6:0", 3), BasisError);
  CHECK_THROWS_AS(parse_basis("jacobi:x:0", 3), BasisError);
  CHECK_THROWS_AS(parse_basis("hermite", 3), BasisError);
}

TEST_CASE("eval_phi closed forms") {
  const auto c4 = make_basis(BasisKind::Chebyshev1, 4);
  const auto v = eval_phi(c4, 1.0);
  for (double x : v.phi) CHECK(x == 1.0);
  CHECK(v.phi_n == 1.0);

  const auto m3 = make_basis(BasisKind::Monomial, 3);
  const auto w = eval_phi(m3, 2.0);
  CHECK(w.phi == std::vector<double>{4.0, 2.0, 1.0});
  CHECK(w.phi_n == 8.0);

  const auto sh = make_basis(BasisKind::MonomialShifted, 3);
  CHECK(eval_phi(sh, 2.0).phi_n == 9.0);

  for (double a : {-0.5, 0.0, 0.5, 1.5}) {
    const auto j = make_basis(BasisKind::Jacobi, 6, a, 0.25);
    const auto u = eval_phi(j, 1.0);
    for (int k = 0; k < 6; ++k) {
      const int deg = 5 - k;
      const double binom = std::exp(std::lgamma(deg + a + 1) - std::lgamma(deg + 1.0) - std::lgamma(a + 1));
      CHECK(u.phi[k] == doctest::Approx(binom).epsilon(1e-13));
    }
  }
}

TEST_CASE("Jacobi recurrence values match the explicit sum") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, -0.3}, {2.0, 1.0}, {-0.5, -0.5}}) {
    const auto s = make_basis(BasisKind::Jacobi, 7, a, b);
    for (int t = 0; t < 10; ++t) {
      const double x = ux(gen);
      const auto v = eval_phi(s, x);
      for (int k = 0; k < 7; ++k) {
        const double ref = static_cast<double>(oracle::jacobi_explicit(6 - k, a, b, x));
        CHECK(std::abs(v.phi[k] - ref) <= 1e-12 * (1.0 + std::abs(ref)));
      }
      CHECK(std::abs(v.phi_n - static_cast<double>(oracle::jacobi_explicit(7, a, b, x))) < 1e-12 * (1 + std::abs(v.phi_n)));
    }
  }
}

TEST_CASE("eval_poly") {
  const auto m2 = make_basis(BasisKind::Monomial, 2);
  const std::vector<double> c{0.0, -1.0};
  CHECK(eval_poly(m2, c, 3.0) == 8.0);
  const auto cheb3 = make_basis(BasisKind::Chebyshev1, 3);
  CHECK(std::abs(eval_poly(cheb3, std::vector<double>(3, 0.0), std::cos(pi / 6))) < 1e-15);
  CHECK_THROWS_AS(eval_poly(m2, std::vector<double>{1.0}, 1.0), BasisError);
}

TEST_CASE("Clenshaw/Horner agree with the Phi dot product") {
  std::mt19937_64 gen(17);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  const char* tags[] = {"monomial", "monomial-shifted", "chebyshev", "jacobi:0:0", "jacobi:1.5:-0.5"};
  for (const char* tag : tags) {
    for (int n : {2, 5, 11}) {
      const auto s = parse_basis(tag, n);
      for (int t = 0; t < 20; ++t) {
        std::vector<double> c(n);
        for (auto& v : c) v = nd(gen);
        const double x = ux(gen);
        const auto ph = eval_phi(s, x);
        double sum = ph.phi_n, mag = std::abs(ph.phi_n);
        for (int k = 0; k < n; ++k) {
          sum += c[k] * ph.phi[k];
          mag += std::abs(c[k] * ph.phi[k]);
        }
        CHECK(std::abs(eval_poly(s, c, x) - sum) <= 1e-13 * mag);
        const std::complex<double> z(x, ux(gen));
        const auto pz = eval_phi(s, z);
        std::complex<double> zs = pz.phi_n;
        double zm = std::abs(pz.phi_n);
        for (int k = 0; k < n; ++k) {
          zs += c[k] * pz.phi[k];
          zm += std::abs(c[k] * pz.phi[k]);
        }
        CHECK(std::abs(eval_poly(s, c, z) - zs) <= 1e-13 * zm);
      }
    }
  }
}

TEST_CASE("recurrence consistency at random points") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (const char* tag : {"chebyshev", "jacobi:0.5:0.5", "jacobi:-0.7:2"}) {
    const auto s = parse_basis(tag, 12);
    for (int t = 0; t < 50; ++t) {
      const double x = ux(gen);
      const auto v = eval_phi(s, x);
      std::vector<double> asc(v.phi.rbegin(), v.phi.rend());
      asc.push_back(v.phi_n);
      for (int j = 2; j <= 12; ++j) {
        const auto& tr = s.triple(j);
        const double rhs = (tr.alpha * x + tr.beta) * asc[j - 1] - tr.gamma * asc[j - 2];
        const double scale = std::abs((tr.alpha * x + tr.beta) * asc[j - 1]) + std::abs(tr.gamma * asc[j - 2]);
        CHECK(std::abs(asc[j] - rhs) <= 1e-13 * scale);
      }
    }
  }
}

TEST_CASE("leading coefficients from symbolic expansion of the recurrence") {
  for (const char* tag : {"chebyshev", "jacobi:0:0", "jacobi:0.5:1.5", "monomial"}) {
    const auto s = parse_basis(tag, 8);
    std::vector<oracle::Poly> p{{1.0L}};
    oracle::Poly prev{0.0L};
    for (int j = 1; j <= 8; ++j) {
      const auto& t = s.triple(j);
      oracle::Poly lin{static_cast<long double>(t.beta), static_cast<long double>(t.alpha)};
      const oracle::Poly next = oracle::padd(oracle::pmul(lin, p.back()), oracle::pscale(prev, -t.gamma));
      prev = p.back();
      p.push_back(next);
    }
    double nu = 1.0;
    for (int j = 1; j <= 8; ++j) {
      nu *= s.triple(j).alpha;
      CHECK(static_cast<double>(p[j].back()) == doctest::Approx(s.nu[j]).epsilon(1e-15));
      CHECK(s.nu[j] == nu);
    }
    CHECK(s.chi == s.nu[8] / s.nu[7]);
  }
}

TEST_CASE("scaling vector") {
  for (const char* tag : {"chebyshev", "jacobi:0:0", "jacobi:2:0.5"}) {
    const auto s = parse_basis(tag, 9);
    const auto d = scaling_vector(s);
    CHECK(d.front() == 1.0);
    CHECK(d.back() == 1.0);
    for (double v : d) CHECK(v > 0.0);
  }
  CHECK_THROWS_AS(scaling_vector(make_basis(BasisKind::Monomial, 3)), BasisError);

  const auto cheb = make_basis(BasisKind::Chebyshev1, 5);
  const auto parts = symmetrize(build_confederate(cheb, std::vector<double>(5, 0.0)));
  CHECK(parts.H(3, 4) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(parts.H(4, 3) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("Jacobi closed-form scaling agrees with the product form") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, 0.5}, {-0.5, -0.5}, {1.0, 3.0}, {-0.9, 4.5}, {2.5, -0.3}}) {
    for (int n : {3, 8, 40}) {
      const auto s = make_basis(BasisKind::Jacobi, n, a, b);
      const auto closed = jacobi_scaling_closed_form(a, b, n);
      for (int k = 0; k <= n; ++k) CHECK(std::abs(closed[k] / s.d[k] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("Jacobi(-1/2,-1/2) scaling reproduces Chebyshev after normalizing phi") {
  // P_j^{(-1/2,-1/2)} = k_j T_j; the symmetrizing scalings then differ by k_j / k_0.
  const int n = 10;
  const auto jac = make_basis(BasisKind::Jacobi, n, -0.5, -0.5);
  const auto che = make_basis(BasisKind::Chebyshev1, n);
  const auto pj = eval_phi(jac, 1.0);
  for (int k = 1; k < n; ++k) {
    // phi_{n-k}(1) = k_{n-k} since T(1) = 1
    CHECK(jac.d[k] / pj.phi[k - 1] == doctest::Approx(che.d[k]).epsilon(1e-12));
  }
}
