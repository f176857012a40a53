#include "optstab/optimal.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "optstab/error.hpp"

namespace optstab {

namespace {

void require_positive(unsigned m, const char* what) {
  if (m == 0) throw DomainError("m_too_small", std::string(what) + " must be at least 1");
}

// i^n
ComplexDD i_power(unsigned n) {
  switch (n % 4) {
    case 0: return {DoubleDouble(1.0), DoubleDouble(0.0)};
    case 1: return {DoubleDouble(0.0), DoubleDouble(1.0)};
    case 2: return {DoubleDouble(-1.0), DoubleDouble(0.0)};
    default: return {DoubleDouble(0.0), DoubleDouble(-1.0)};
  }
}

DoubleDouble reciprocal(double v) { return DoubleDouble(1.0) / DoubleDouble(v); }

// 1 + z^2 * s
RealPolynomial one_plus_square(DoubleDouble s) {
  return RealPolynomial(std::vector<DoubleDouble>{DoubleDouble(1.0), DoubleDouble(0.0), s});
}

constexpr double kRealnessTol = 1e-12;

}  // namespace

void SubstepSchedule::validate() const {
  DoubleDouble sum(0.0);
  for (double x : xi) {
    if (!(x > 0.0)) throw DomainError("invalid_schedule", "every divisor must be positive");
    sum += reciprocal(x);
  }
  if (xi.empty() || std::abs((sum - DoubleDouble(1.0)).to_double()) > 1e-10) {
    throw DomainError("invalid_schedule", "reciprocal divisors must sum to 1");
  }
}

RealPolynomial disc_optimal(unsigned m) {
  require_positive(m, "m");
  const RealPolynomial factor(std::vector<DoubleDouble>{DoubleDouble(1.0), reciprocal(m)});
  RealPolynomial out{1.0};
  for (unsigned i = 0; i < m; ++i) out = out * factor;
  return out;
}

RealPolynomial parabolic_optimal(unsigned m) {
  require_positive(m, "m");
  return affine_compose(chebyshev_t(m), DoubleDouble(1.0), reciprocal(double(m) * m));
}

SubstepSchedule parabolic_substeps(unsigned m) {
  require_positive(m, "m");
  SubstepSchedule s;
  s.m = m;
  const double m2 = double(m) * m;
  for (unsigned i = 1; i <= m; ++i) {
    // 1 - cos(x) = 2 sin^2(x/2) avoids cancellation for the smallest divisor.
    const double h = std::sin(std::numbers::pi * (2.0 * i - 1.0) / (4.0 * m));
    s.xi.push_back(2.0 * m2 * h * h);
  }
  return s;
}

SubstepSchedule reorder(const SubstepSchedule& s, std::span<const std::size_t> perm, std::string label) {
  std::vector<std::size_t> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check.size() != s.xi.size() || check[i] != i) {
      throw DomainError("invalid_schedule", "reordering must be a permutation of the substeps");
    }
  }
  SubstepSchedule out{s.m, {}, std::move(label)};
  for (std::size_t i : perm) out.xi.push_back(s.xi[i]);
  return out;
}

RealPolynomial second_order_optimal(unsigned m) {
  require_positive(m, "m");
  return affine_compose(chebyshev_t(m), DoubleDouble(1.0), -reciprocal(2.0 * m * m));
}

RealPolynomial hyperbolic_optimal_general(unsigned m) {
  if (m < 2) throw DomainError("m_too_small", "hyperbolic construction needs m >= 2");
  const double n = m - 1;
  // z/(i n) = -i z / n
  const ComplexDD arg{DoubleDouble(0.0), -reciprocal(n)};
  const ComplexPolynomial t_part = compose_scale(ComplexPolynomial(chebyshev_t(m - 1)), arg);
  const ComplexPolynomial u_part = compose_scale(ComplexPolynomial(chebyshev_u(m - 2)), arg);
  const ComplexPolynomial bump(one_plus_square(reciprocal(n * n)));
  const ComplexPolynomial sum =
      add(scale(t_part, i_power(m - 1)), scale(multiply(bump, u_part), i_power(m - 2)));
  return sum.real_part_checked(kRealnessTol);
}

RealPolynomial hyperbolic_optimal_odd(unsigned k) {
  require_positive(k, "k");
  const double kk = k;
  const DoubleDouble shift = reciprocal(2.0 * kk * kk);
  const RealPolynomial even_part = compose_square(affine_compose(chebyshev_t(k), DoubleDouble(1.0), shift));
  const RealPolynomial u = compose_square(affine_compose(chebyshev_u(k - 1), DoubleDouble(1.0), shift));
  const RealPolynomial lead(std::vector<DoubleDouble>{DoubleDouble(0.0), reciprocal(kk)});
  return even_part + lead * one_plus_square(reciprocal(4.0 * kk * kk)) * u;
}

RealPolynomial hyperbolic_optimal_even(unsigned k) {
  require_positive(k, "k");
  const double n = 2.0 * k - 1.0;
  const ComplexDD arg{DoubleDouble(0.0), -reciprocal(n)};
  const ComplexPolynomial u = compose_scale(ComplexPolynomial(chebyshev_u(2 * k - 2)), arg);
  const ComplexPolynomial t = compose_scale(ComplexPolynomial(chebyshev_t(2 * k - 1)), arg);
  const ComplexPolynomial bracket =
      add(multiply(ComplexPolynomial(one_plus_square(reciprocal(n * n))), u), scale(t, i_power(1)));
  const double sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
  return bracket.real_part_checked(kRealnessTol) * RealPolynomial{sign};
}

RealPolynomial hyperbolic_optimal(unsigned m) {
  if (m < 2) throw DomainError("m_too_small", "hyperbolic optimum is defined for m >= 2");
  RealPolynomial p = m % 2 == 1 ? hyperbolic_optimal_odd((m - 1) / 2) : hyperbolic_optimal_even(m / 2);
#ifndef NDEBUG
  {
    const RealPolynomial g = hyperbolic_optimal_general(m);
    assert(g.degree() == p.degree());
    for (std::size_t j = 0; j <= p.degree(); ++j) assert(std::abs(g[j] - p[j]) <= 1e-12);
  }
#endif
  return p;
}

Complex eval_hyperbolic_odd_alt(unsigned k, Complex z) {
  require_positive(k, "k");
  const double kk = k;
  const Complex w = z / Complex(0.0, 2.0 * kk);
  const Complex bump = 1.0 + z * z / (4.0 * kk * kk);
  const Complex bracket = chebyshev_t(2 * k)(w) - Complex(0.0, 1.0) * bump * chebyshev_u(2 * k - 1)(w);
  return k % 2 == 0 ? bracket : -bracket;
}

Complex eval_hyperbolic_even(unsigned k, Complex z) {
  require_positive(k, "k");
  const double n = 2.0 * k - 1.0;
  const Complex w = z / Complex(0.0, n);
  const Complex bracket =
      (1.0 + z * z / (n * n)) * chebyshev_u(2 * k - 2)(w) + Complex(0.0, 1.0) * chebyshev_t(2 * k - 1)(w);
  return (k - 1) % 2 == 0 ? bracket : -bracket;
}

Complex eval_hyperbolic_general(unsigned m, Complex z) {
  if (m < 2) throw DomainError("m_too_small", "hyperbolic construction needs m >= 2");
  const double n = m - 1;
  const Complex w = z / Complex(0.0, n);
  const auto ipow = [](unsigned e) {
    const ComplexDD v = i_power(e);
    return Complex(v.re.to_double(), v.im.to_double());
  };
  return ipow(m - 1) * chebyshev_t(m - 1)(w) + ipow(m - 2) * (1.0 + z * z / (n * n)) * chebyshev_u(m - 2)(w);
}

double hyperbolic_even_real_part(unsigned k, double y) {
  require_positive(k, "k");
  const double n = 2.0 * k - 1.0;
  const double v = (1.0 - y / (n * n)) * chebyshev_u(2 * k - 2)(std::sqrt(y) / n);
  return (k - 1) % 2 == 0 ? v : -v;
}

}  // namespace optstab
