#pragma once

// Unevaluated sum of two doubles (hi + lo, |lo| <= ulp(hi)/2), giving roughly
// 106 bits of significand. Used as the coefficient type of RealPolynomial:
// optimal stability polynomials of degree ~20 have monomial coefficients whose
// double rounding alone moves |P| off 1 by more than 1e-2 on their intervals.
//
// Requires IEEE binary64 arithmetic with round-to-nearest; do not build with
// -ffast-math.

#include <cmath>
#include <compare>
#include <cstdint>

namespace optstab {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double v) : hi(v), lo(0.0) {}  // NOLINT: implicit by intent
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  static DoubleDouble from_int(std::int64_t n);

  [[nodiscard]] constexpr double to_double() const { return hi + lo; }
  [[nodiscard]] constexpr bool is_zero() const { return hi == 0.0 && lo == 0.0; }
};

namespace dd_detail {

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  using namespace dd_detail;
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  using namespace dd_detail;
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator*(DoubleDouble a, double b) {
  DoubleDouble p = dd_detail::two_prod(a.hi, b);
  p.lo += a.lo * b;
  return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  // Two Newton-style correction rounds on the double quotient.
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * DoubleDouble(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DoubleDouble(q2);
  const double q3 = r.hi / b.hi;
  DoubleDouble q = dd_detail::quick_two_sum(q1, q2);
  return q + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, DoubleDouble b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, DoubleDouble b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, DoubleDouble b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, DoubleDouble b) { return a = a / b; }

inline bool operator==(DoubleDouble a, DoubleDouble b) { return a.hi == b.hi && a.lo == b.lo; }

inline std::partial_ordering operator<=>(DoubleDouble a, DoubleDouble b) {
  if (auto c = a.hi <=> b.hi; c != 0) return c;
  return a.lo <=> b.lo;
}

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline DoubleDouble DoubleDouble::from_int(std::int64_t n) {
  // Exact for every 64-bit integer.
  const auto hi = static_cast<double>(n);
  const auto rest = n - static_cast<std::int64_t>(hi);
  return dd_detail::quick_two_sum(hi, static_cast<double>(rest));
}

/// Complex number with double-double parts; only what Horner evaluation needs.
struct ComplexDD {
  DoubleDouble re;
  DoubleDouble im;
};

inline ComplexDD operator+(const ComplexDD& a, const ComplexDD& b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexDD operator-(const ComplexDD& a, const ComplexDD& b) { return {a.re - b.re, a.im - b.im}; }
inline ComplexDD operator*(const ComplexDD& a, const ComplexDD& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexDD operator*(const ComplexDD& a, DoubleDouble s) { return {a.re * s, a.im * s}; }

}  // namespace optstab
