#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "optstab/error.hpp"
#include "optstab/optimal.hpp"
#include "optstab/stability.hpp"

using namespace optstab;

namespace {

// One step of the tableau applied to x' = lambda x with x0 = 1, via the stage loop.
Complex rk_scalar_step(const ButcherTableau& t, Complex z) {
  const std::size_t s = t.stages();
  std::vector<Complex> k(s);
  for (std::size_t i = 0; i < s; ++i) {
    Complex stage = 1.0;
    for (std::size_t j = 0; j < i; ++j) stage += t.A[i][j] * k[j];
    k[i] = z * stage;
  }
  Complex x = 1.0;
  for (std::size_t i = 0; i < s; ++i) x += t.b[i] * k[i];
  return x;
}

ButcherTableau euler_substeps_tableau(std::size_t s) {
  ButcherTableau t;
  t.A.assign(s, std::vector<double>(s, 0.0));
  t.b.assign(s, 1.0 / s);
  t.c.assign(s, 0.0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < i; ++j) t.A[i][j] = 1.0 / s;
    t.c[i] = static_cast<double>(i) / s;
  }
  return t;
}

// Bisection root of a continuous function with f(lo), f(hi) of opposite sign.
template <class F>
double bisect_root(F f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("stability_polynomial of standard tableaus") {
  CHECK(stability_polynomial(euler_tableau()) == RealPolynomial{1.0, 1.0});

  const RealPolynomial rk4 = stability_polynomial(rk4_tableau());
  REQUIRE(rk4.degree() == 4);
  CHECK(rk4[0] == 1.0);
  CHECK(rk4[1] == 1.0);
  CHECK(rk4[2] == 0.5);
  CHECK(rk4[3] == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
  CHECK(rk4[4] == doctest::Approx(1.0 / 24.0).epsilon(1e-16));

  const ButcherTableau two_halves{{{0.0, 0.0}, {0.5, 0.0}}, {0.5, 0.5}, {0.0, 0.5}};
  CHECK(stability_polynomial(two_halves) == RealPolynomial{1.0, 1.0, 0.25});
}

TEST_CASE("stability_polynomial matches the stage loop on the test equation") {
  const ButcherTableau t = rk4_tableau();
  const RealPolynomial p = stability_polynomial(t);
  for (const Complex z : {Complex(-1.3, 0.2), Complex(0.0, 2.5), Complex(-2.7, -1.1)}) {
    CHECK(std::abs(p(z) - rk_scalar_step(t, z)) <= 1e-14);
  }
}

TEST_CASE("composed Euler substeps give (1 + z/s)^s") {
  for (std::size_t s = 1; s <= 10; ++s) {
    const RealPolynomial p = stability_polynomial(euler_substeps_tableau(s));
    const RealPolynomial q = disc_optimal(static_cast<unsigned>(s));
    REQUIRE(p.degree() == q.degree());
    for (std::size_t j = 0; j <= s; ++j) CHECK(std::abs(p[j] - q[j]) <= 1e-12);
  }
}

TEST_CASE("tableau validation") {
  ButcherTableau implicit = euler_tableau();
  implicit.A[0][0] = 0.5;
  CHECK_THROWS_AS(implicit.validate(), DomainError);
  try {
    implicit.validate();
  } catch (const DomainError& e) {
    CHECK(e.code() == "implicit_tableau");
  }

  ButcherTableau bad_b = rk4_tableau();
  bad_b.b[0] = 0.2;
  CHECK_THROWS_AS((void)stability_polynomial(bad_b), DomainError);

  ButcherTableau bad_c = rk4_tableau();
  bad_c.c[2] = 0.4;
  CHECK_THROWS_AS(bad_c.validate(), DomainError);

  ButcherTableau ragged = rk4_tableau();
  ragged.A[1].pop_back();
  CHECK_THROWS_AS(ragged.validate(), DomainError);
}

TEST_CASE("chain tableau realises a given polynomial") {
  const RealPolynomial p = hyperbolic_optimal(5);
  const ButcherTableau t = tableau_for_polynomial(p);
  const RealPolynomial q = stability_polynomial(t);
  REQUIRE(q.degree() == p.degree());
  for (std::size_t j = 0; j <= p.degree(); ++j) CHECK(q[j] == doctest::Approx(p[j]).epsilon(1e-15));
  CHECK_THROWS_AS((void)tableau_for_polynomial(RealPolynomial{1.0, 2.0}), DomainError);
  CHECK_THROWS_AS((void)tableau_for_polynomial(RealPolynomial{1.0, 1.0, 0.0, 1.0}), DomainError);
}

TEST_CASE("axis_max") {
  CHECK(axis_max(RealPolynomial{1.0, 1.0}, Axis::negative_real, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(axis_max(RealPolynomial{1.0, 1.0, 0.125}, Axis::negative_real, 8.0) <= 1.0 + 1e-14);
  CHECK(axis_max(RealPolynomial{1.0, 1.0, 0.125}, Axis::negative_real, 8.0) >= 1.0 - 1e-14);
  CHECK(axis_max(RealPolynomial{1.0, 1.0}, Axis::imaginary, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("stability_width on simple polynomials") {
  CHECK(stability_width(RealPolynomial{1.0, 1.0}, Axis::negative_real) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(stability_width(RealPolynomial{1.0, 1.0}, Axis::imaginary) == 0.0);
  for (unsigned m = 1; m <= 8; ++m) CHECK(stability_width(disc_optimal(m), Axis::imaginary) == 0.0);
}

TEST_CASE("stability_width of the optimal families") {
  for (unsigned m = 1; m <= 20; ++m) {
    INFO("m = " << m);
    CHECK(std::abs(stability_width(parabolic_optimal(m), Axis::negative_real) - 2.0 * m * m) <= 1e-6);
  }
  for (unsigned m = 2; m <= 20; ++m) {
    INFO("m = " << m);
    CHECK(std::abs(stability_width(hyperbolic_optimal(m), Axis::imaginary) - (m - 1.0)) <= 1e-6);
  }
}

TEST_CASE("RK4 interval widths against independent roots") {
  const RealPolynomial p = stability_polynomial(rk4_tableau());
  // P(x) = 1 on the negative axis <=> x^3 + 4x^2 + 12x + 24 = 0.
  const double real_edge = bisect_root([](double x) { return ((x + 4.0) * x + 12.0) * x + 24.0; }, -4.0, -1.0);
  CHECK(stability_width(p, Axis::negative_real) == doctest::Approx(-real_edge).epsilon(1e-8));
  CHECK(-real_edge == doctest::Approx(2.7853).epsilon(1e-4));
  // |P(iy)|^2 = 1 - y^6/72 + y^8/576 <= 1 <=> y^2 <= 8.
  CHECK(stability_width(p, Axis::imaginary) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-8));
}

TEST_CASE("stability_width is monotone in eps") {
  const std::vector<RealPolynomial> polys{stability_polynomial(rk4_tableau()), parabolic_optimal(4),
                                          hyperbolic_optimal(6), RealPolynomial{1.0, 1.0, 0.3}};
  for (const auto& p : polys) {
    for (Axis axis : {Axis::negative_real, Axis::imaginary}) {
      double prev = 0.0;
      for (double eps : {1e-12, 1e-9, 1e-6, 1e-3}) {
        const double w = stability_width(p, axis, WidthOptions{eps, 1e-8, 4096});
        CHECK(w >= prev);
        prev = w;
      }
    }
  }
}

TEST_CASE("disc_boundary_max") {
  for (unsigned m = 1; m <= 30; ++m) {
    INFO("m = " << m);
    CHECK(std::abs(disc_boundary_max(disc_optimal(m), m) - 1.0) <= 1e-10);
  }
  CHECK(disc_boundary_max(RealPolynomial{1.0, 1.0, 0.5}, 2) > 1.0 + 1e-3);
  CHECK(disc_boundary_max(RealPolynomial{1.0, 1.0}, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("any consistent polynomial reaches 1 on the disc boundary") {
  std::mt19937 gen(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned m = 2 + trial % 6;
    std::vector<double> c{1.0, 1.0};
    for (unsigned j = 2; j <= m; ++j) c.push_back(u(gen) / std::pow(double(m), j - 1));
    CHECK(disc_boundary_max(RealPolynomial(c), m) >= 1.0 - 1e-10);
  }
}

TEST_CASE("region_scan") {
  SUBCASE("Euler disc") {
    const RegionGrid g = region_scan(RealPolynomial{1.0, 1.0}, {-2.5, 0.5, -1.5, 1.5}, 64, 64);
    REQUIRE(g.values.size() == 64 * 64);
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
      for (std::size_t ix = 0; ix < g.nx; ++ix) {
        const Complex z = g.center(ix, iy);
        if (std::abs(z + 1.0) < 1.0) CHECK(g.at(ix, iy) < 1.0);
        CHECK(g.at(ix, iy) == std::abs(eval_complex(RealPolynomial{1.0, 1.0}, z)));
      }
    }
  }
  SUBCASE("parabolic m = 3 is bounded on its segment") {
    // 20 columns over [-19, 1] put centres at -18.5, ..., 0.5; 5 rows put one on the axis.
    const RealPolynomial p = parabolic_optimal(3);
    const RegionGrid g = region_scan(p, {-19.0, 1.0, -2.0, 2.0}, 20, 5);
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const Complex z = g.center(ix, 2);
      REQUIRE(z.imag() == 0.0);
      if (z.real() >= -18.0 && z.real() <= 0.0) CHECK(g.at(ix, 2) <= 1.0 + 1e-9);
    }
  }
  SUBCASE("constant polynomial") {
    const RegionGrid g = region_scan(RealPolynomial{1.0}, {-1.0, 1.0, -1.0, 1.0}, 7, 3);
    for (double v : g.values) CHECK(v == 1.0);
  }
  SUBCASE("worker count does not change the output") {
    const RealPolynomial p = hyperbolic_optimal(7);
    const RegionGrid a = region_scan(p, {-5.0, 1.0, -7.0, 7.0}, 33, 41, 1);
    const RegionGrid b = region_scan(p, {-5.0, 1.0, -7.0, 7.0}, 33, 41, 4);
    CHECK(a.values == b.values);
  }
  SUBCASE("degenerate boxes are rejected") {
    CHECK_THROWS_AS((void)region_scan(RealPolynomial{1.0}, {1.0, 1.0, -1.0, 1.0}, 4, 4), DomainError);
    CHECK_THROWS_AS((void)region_scan(RealPolynomial{1.0}, {0.0, 1.0, 2.0, 1.0}, 4, 4), DomainError);
    CHECK_THROWS_AS((void)region_scan(RealPolynomial{1.0}, {0.0, 1.0, 0.0, 1.0}, 0, 4), DomainError);
    CHECK_THROWS_AS((void)region_scan(RealPolynomial{1.0}, {0.0, 1.0, 0.0, 1.0}, 20000, 20000), DomainError);
  }
}

TEST_CASE("consistency_check") {
  CHECK(consistency_check(RealPolynomial{1.0, 1.0, 0.125}));
  CHECK_FALSE(consistency_check(RealPolynomial{1.0, 2.0}));
  CHECK_FALSE(consistency_check(RealPolynomial{1.0}));
}

TEST_CASE("stability report") {
  const StabilityReport r = stability_report(stability_polynomial(rk4_tableau()), 4);
  CHECK(r.real_width == doctest::Approx(2.785293563).epsilon(1e-8));
  CHECK(r.imag_width == doctest::Approx(std::sqrt(8.0)).epsilon(1e-8));
  CHECK(r.disc_max > 1.0);
  CHECK(r.tolerance == 1e-8);
}
