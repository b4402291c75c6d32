#pragma once

// Double-double arithmetic built from error-free transformations.
//
// A DoubleDouble is the unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving
// roughly 106 bits (~31 decimal digits) of significand. Used as the extended
// precision scalar for determinant and interpolation oracles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

namespace confed {

namespace eft {

/// s + e == a + b exactly.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

/// Requires |a| >= |b|.
inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

/// p + e == a * b exactly (barring under/overflow).
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace eft

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit by design of a scalar type
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  [[nodiscard]] double to_double() const { return hi + lo; }

  DoubleDouble& operator+=(const DoubleDouble& b);
  DoubleDouble& operator-=(const DoubleDouble& b);
  DoubleDouble& operator*=(const DoubleDouble& b);
  DoubleDouble& operator/=(const DoubleDouble& b);
};

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  double s, e, t, f;
  eft::two_sum(a.hi, b.hi, s, e);
  eft::two_sum(a.lo, b.lo, t, f);
  e += t;
  eft::quick_two_sum(s, e, s, e);
  e += f;
  eft::quick_two_sum(s, e, s, e);
  return {s, e};
}

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  double p, e;
  eft::two_prod(a.hi, b.hi, p, e);
  e += a.hi * b.lo + a.lo * b.hi;
  eft::quick_two_sum(p, e, p, e);
  return {p, e};
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - DoubleDouble(q1) * b;
  const double q2 = r.hi / b.hi;
  r -= DoubleDouble(q2) * b;
  const double q3 = r.hi / b.hi;
  double s, e;
  eft::quick_two_sum(q1, q2, s, e);
  return DoubleDouble(s, e) + DoubleDouble(q3);
}

inline DoubleDouble& DoubleDouble::operator+=(const DoubleDouble& b) { return *this = *this + b; }
inline DoubleDouble& DoubleDouble::operator-=(const DoubleDouble& b) { return *this = *this - b; }
inline DoubleDouble& DoubleDouble::operator*=(const DoubleDouble& b) { return *this = *this * b; }
inline DoubleDouble& DoubleDouble::operator/=(const DoubleDouble& b) { return *this = *this / b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
inline bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
inline bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

/// Square root via one Newton step on the double estimate.
inline DoubleDouble sqrt(const DoubleDouble& a) {
  if (a.hi <= 0.0) return DoubleDouble(0.0);
  const double x = 1.0 / std::sqrt(a.hi);
  const double ax = a.hi * x;
  const DoubleDouble diff = a - DoubleDouble(ax) * DoubleDouble(ax);
  return DoubleDouble(ax) + DoubleDouble(diff.hi * (x * 0.5));
}

inline std::ostream& operator<<(std::ostream& os, const DoubleDouble& a) {
  return os << a.hi << (a.lo < 0 ? " - " : " + ") << std::abs(a.lo);
}

/// Complex number over double-double components.
struct ComplexDD {
  DoubleDouble re;
  DoubleDouble im;

  constexpr ComplexDD() = default;
  constexpr ComplexDD(DoubleDouble r) : re(r) {}  // NOLINT
  constexpr ComplexDD(double r) : re(r) {}        // NOLINT
  constexpr ComplexDD(DoubleDouble r, DoubleDouble i) : re(r), im(i) {}
  ComplexDD(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  [[nodiscard]] std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  ComplexDD& operator+=(const ComplexDD& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  ComplexDD& operator-=(const ComplexDD& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
};

inline ComplexDD operator-(const ComplexDD& a) { return {-a.re, -a.im}; }
inline ComplexDD operator+(const ComplexDD& a, const ComplexDD& b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexDD operator-(const ComplexDD& a, const ComplexDD& b) { return {a.re - b.re, a.im - b.im}; }
inline ComplexDD operator*(const ComplexDD& a, const ComplexDD& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexDD operator/(const ComplexDD& a, const ComplexDD& b) {
  // Scale by the larger component to keep |b|^2 in range.
  const double scale = std::max(std::abs(b.re.hi), std::abs(b.im.hi));
  const DoubleDouble s = scale > 0.0 ? DoubleDouble(1.0 / scale) : DoubleDouble(1.0);
  const DoubleDouble br = b.re * s;
  const DoubleDouble bi = b.im * s;
  const DoubleDouble den = br * br + bi * bi;
  return {(a.re * br + a.im * bi) / den * s, (a.im * br - a.re * bi) / den * s};
}
inline ComplexDD& operator*=(ComplexDD& a, const ComplexDD& b) { return a = a * b; }
inline ComplexDD& operator/=(ComplexDD& a, const ComplexDD& b) { return a = a / b; }
inline bool operator==(const ComplexDD& a, const ComplexDD& b) { return a.re == b.re && a.im == b.im; }

/// Magnitude estimate used for pivot selection (working precision is enough).
inline double magnitude(const DoubleDouble& a) { return std::abs(a.hi); }
inline double magnitude(const ComplexDD& a) { return std::hypot(a.re.hi, a.im.hi); }

inline double to_working(const DoubleDouble& a) { return a.to_double(); }
inline std::complex<double> to_working(const ComplexDD& a) { return a.to_complex(); }

}  // namespace confed
