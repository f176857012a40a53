#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "optstab/poly.hpp"

namespace optstab {

/// Explicit Runge-Kutta coefficients. A is stored row-major as s rows of s.
struct ButcherTableau {
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  std::vector<double> c;

  [[nodiscard]] std::size_t stages() const { return b.size(); }

  /// Throws DomainError: "malformed_tableau" (shape), "implicit_tableau"
  /// (A not strictly lower triangular), "inconsistent_tableau" (sum b != 1 or
  /// c not the row sums of A, tolerance 1e-12).
  void validate() const;
};

[[nodiscard]] ButcherTableau euler_tableau();
[[nodiscard]] ButcherTableau rk4_tableau();

/// Chain tableau (b = e_s, single subdiagonal) whose stability polynomial is p.
/// Requires p consistent with nonzero coefficients up to its degree.
[[nodiscard]] ButcherTableau tableau_for_polynomial(const RealPolynomial& p);

enum class Axis { negative_real, imaginary };

[[nodiscard]] std::string_view to_string(Axis axis);

struct WidthOptions {
  double eps = 1e-9;  ///< slack on |P|^2 <= 1
  double tol = 1e-8;  ///< bisection resolution on the width
  std::size_t samples = 4096;
};

struct StabilityReport {
  double real_width = 0.0;
  double imag_width = 0.0;
  double disc_max = 0.0;
  double tolerance = 0.0;
};

struct RegionBox {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
};

/// |P(z)| at cell centres. Row iy holds im-centre iy, column ix re-centre ix.
struct RegionGrid {
  RegionBox box{};
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> values;

  [[nodiscard]] Complex center(std::size_t ix, std::size_t iy) const;
  [[nodiscard]] double at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
};

/// P(z) = 1 + sum_j z^{j+1} b^T A^j 1, accumulated in double-double.
[[nodiscard]] RealPolynomial stability_polynomial(const ButcherTableau& t);

/// max |P|^2 over [-a, 0] or [-ia, ia].
[[nodiscard]] double axis_max(const RealPolynomial& p, Axis axis, double a, std::size_t samples = 4096);

/// Largest a with axis_max(p, axis, a) <= 1 + eps, by doubling from a = 1
/// (capped at 8 deg^2) and bisection. If |P|^2 grows away from z = 0 along the
/// axis to leading order, the width is 0 regardless of eps.
[[nodiscard]] double stability_width(const RealPolynomial& p, Axis axis, const WidthOptions& opts = {});

/// max |P| on the circle |1 + z/m| = 1.
[[nodiscard]] double disc_boundary_max(const RealPolynomial& p, unsigned m, std::size_t samples = 4096);

/// Throws DomainError("bad_box") for empty boxes or zero counts and
/// DomainError("grid_too_large") beyond 1e8 cells. workers == 0 picks the
/// hardware concurrency; the output does not depend on it.
[[nodiscard]] RegionGrid region_scan(const RealPolynomial& p, const RegionBox& box, std::size_t nx,
                                     std::size_t ny, unsigned workers = 0);

/// P(0) = P'(0) = 1 within 1e-12.
[[nodiscard]] bool consistency_check(const RealPolynomial& p);

/// Q(y) = |P(i sqrt(y))|^2 = R(y)^2 + y I(y)^2, from the even/odd split of p.
[[nodiscard]] RealPolynomial imaginary_modulus_squared(const RealPolynomial& p);

/// Widths on both axes plus the disc maximum at radius m.
[[nodiscard]] StabilityReport stability_report(const RealPolynomial& p, unsigned m, const WidthOptions& opts = {});

}  // namespace optstab
