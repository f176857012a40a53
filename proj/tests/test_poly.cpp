#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "optstab/error.hpp"
#include "optstab/poly.hpp"

using namespace optstab;

namespace {

void check_coeffs(const RealPolynomial& p, const std::vector<double>& expected, double tol = 1e-15) {
  REQUIRE(p.degree() + 1 == expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) {
    INFO("coefficient " << j);
    CHECK(p[j] == doctest::Approx(expected[j]).epsilon(tol));
  }
}

RealPolynomial random_integer_poly(std::mt19937& gen, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::vector<double> c(deg(gen) + 1);
  for (auto& v : c) v = coef(gen);
  return RealPolynomial(c);
}

}  // namespace

TEST_CASE("canonical form strips exact trailing zeros only") {
  CHECK(RealPolynomial{1.0, 2.0, 0.0, 0.0}.degree() == 1);
  CHECK(RealPolynomial{0.0, 0.0}.is_zero());
  CHECK(RealPolynomial{}.degree() == 0);
  CHECK(RealPolynomial{1.0, 1e-300}.degree() == 1);
}

TEST_CASE("eval_complex") {
  const RealPolynomial euler{1.0, 1.0};
  CHECK(eval_complex(euler, Complex(-2.0, 0.0)) == Complex(-1.0, 0.0));

  const Complex v = eval_complex(euler, Complex(0.0, 1.0));
  CHECK(v == Complex(1.0, 1.0));
  CHECK(std::abs(v) == doctest::Approx(std::sqrt(2.0)));

  const Complex w = eval_complex(RealPolynomial{1.0, 1.0, 1.0}, Complex(0.0, 1.0));
  CHECK(w == Complex(0.0, 1.0));
  CHECK(std::abs(w) == 1.0);
}

TEST_CASE("eval_imag agrees with complex Horner") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(1 + trial % 9);
    for (auto& v : c) v = u(gen);
    const RealPolynomial p(c);
    const double y = 3.0 * u(gen);
    const Complex a = p.eval_imag(y);
    const Complex b = p(Complex(0.0, y));
    CHECK(std::abs(a - b) <= 1e-14 * (1.0 + std::abs(b)));
  }
}

TEST_CASE("derivative") {
  check_coeffs(derivative(RealPolynomial{1.0, 1.0, 0.125}), {1.0, 0.25});
  CHECK(derivative(RealPolynomial{3.5}).is_zero());
  const RealPolynomial d = derivative(chebyshev_t(3));
  check_coeffs(d, {-3.0, 0.0, 12.0});
  CHECK(d(1.0) == 9.0);
}

TEST_CASE("multiply") {
  check_coeffs(RealPolynomial{1.0, 1.0} * RealPolynomial{1.0, -1.0}, {1.0, 0.0, -1.0});
  check_coeffs(RealPolynomial{0.0, 1.0} * RealPolynomial{0.0, 1.0}, {0.0, 0.0, 1.0});
  // T1^2 = (T0 + T2) / 2
  const RealPolynomial lhs = chebyshev_t(1) * chebyshev_t(1);
  const RealPolynomial rhs = scale(chebyshev_t(0) + chebyshev_t(2), DoubleDouble(0.5));
  CHECK(lhs == rhs);
  CHECK((RealPolynomial{} * RealPolynomial{1.0, 2.0}).is_zero());
}

TEST_CASE("multiply is commutative and distributive on integer inputs") {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_integer_poly(gen, 8);
    const auto q = random_integer_poly(gen, 8);
    const auto r = random_integer_poly(gen, 8);
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("affine_compose") {
  // 2(1 + z/4)^2 - 1 = 1 + z + z^2/8
  check_coeffs(affine_compose(chebyshev_t(2), 1.0, 0.25), {1.0, 1.0, 0.125});
  // 2(1 - z/8)^2 - 1 = 1 - z/2 + z^2/32
  check_coeffs(affine_compose(chebyshev_t(2), 1.0, -1.0 / 8.0), {1.0, -0.5, 1.0 / 32.0});

  const RealPolynomial p{0.3, -1.2, 4.0, 0.7};
  CHECK(affine_compose(p, 0.0, 1.0) == p);
  // b = 0 collapses to the constant p(a)
  const RealPolynomial c = affine_compose(p, 2.0, 0.0);
  CHECK(c.degree() == 0);
  CHECK(c[0] == doctest::Approx(p(2.0)));
}

TEST_CASE("affine_compose inverse reproduces p") {
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> bdist(0.2, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(2 + trial % 12);
    for (auto& v : c) v = u(gen);
    const RealPolynomial p(c);
    const double a = 2.0 * u(gen);
    const double b = (trial % 2 ? -1.0 : 1.0) * bdist(gen);
    const RealPolynomial back =
        affine_compose(affine_compose(p, a, b), -DoubleDouble(a) / DoubleDouble(b), DoubleDouble(1.0) / DoubleDouble(b));
    REQUIRE(back.degree() == p.degree());
    for (std::size_t j = 0; j <= p.degree(); ++j) {
      CHECK(std::abs(back[j] - p[j]) <= 1e-12 * std::abs(p[j]));
    }
  }
}

TEST_CASE("from_real_roots") {
  check_coeffs(from_real_roots(std::vector<double>{4.0}), {1.0, 0.25});
  check_coeffs(from_real_roots(std::vector<double>{1.0, 1.0}), {1.0, 2.0, 1.0});
  const double s = std::sqrt(2.0);
  check_coeffs(from_real_roots(std::vector<double>{4.0 - 2.0 * s, 4.0 + 2.0 * s}), {1.0, 1.0, 0.125}, 1e-14);
  CHECK_THROWS_AS((void)from_real_roots(std::vector<double>{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS((void)from_real_roots(std::vector<double>{-2.0}), DomainError);
}

TEST_CASE("chebyshev constructors") {
  CHECK(chebyshev_t(0) == RealPolynomial{1.0});
  CHECK(chebyshev_t(1) == RealPolynomial{0.0, 1.0});
  CHECK(chebyshev_t(2) == RealPolynomial{-1.0, 0.0, 2.0});
  CHECK(chebyshev_t(3) == RealPolynomial{0.0, -3.0, 0.0, 4.0});
  CHECK(std::abs(chebyshev_t(3)(std::cos(std::numbers::pi / 6.0))) <= 1e-15);

  CHECK(chebyshev_u(0) == RealPolynomial{1.0});
  CHECK(chebyshev_u(1) == RealPolynomial{0.0, 2.0});
  CHECK(chebyshev_u(2) == RealPolynomial{-1.0, 0.0, 4.0});
  CHECK(derivative(chebyshev_t(3)) == scale(chebyshev_u(2), DoubleDouble(3.0)));
}

TEST_CASE("T_k' = k U_{k-1} exactly up to k = 60") {
  for (unsigned k = 1; k <= 60; ++k) {
    INFO("k = " << k);
    CHECK(derivative(chebyshev_t(k)) == scale(chebyshev_u(k - 1), DoubleDouble(double(k))));
  }
}

TEST_CASE("trigonometric characterisation of T_k and U_{k-1}") {
  double worst_t = 0.0;
  double worst_u = 0.0;
  for (unsigned k = 1; k <= 60; ++k) {
    const RealPolynomial t = chebyshev_t(k);
    const RealPolynomial u = chebyshev_u(k - 1);
    for (int i = 0; i < 1000; ++i) {
      const double theta = std::numbers::pi * i / 999.0;
      const double x = std::cos(theta);
      worst_t = std::max(worst_t, std::abs(t(x) - std::cos(k * theta)));
      worst_u = std::max(worst_u, std::abs(u(x) * std::sin(theta) - std::sin(k * theta)));
    }
  }
  CHECK(worst_t <= 1e-9);
  CHECK(worst_u <= 1e-9);
}

TEST_CASE("complex polynomial realness check") {
  const ComplexPolynomial real_only(RealPolynomial{1.0, 2.0});
  CHECK(real_only.real_part_checked(1e-12) == RealPolynomial{1.0, 2.0});
  const ComplexPolynomial mixed(std::vector<ComplexDD>{{DoubleDouble(1.0), DoubleDouble(0.0)},
                                                      {DoubleDouble(1.0), DoubleDouble(1e-6)}});
  CHECK_THROWS_AS((void)mixed.real_part_checked(1e-12), std::logic_error);
}
