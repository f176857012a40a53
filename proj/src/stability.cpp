#include "optstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "optstab/error.hpp"
#include "optstab/maximize.hpp"

namespace optstab {

namespace {

constexpr double kTableauTol = 1e-12;

// Sign of the lowest-order significant coefficient of D, k >= 1; 0 if none.
// A coefficient is noise when it is below 1e-25 of the magnitude of the terms
// that produced it.
int leading_sign(std::span<const DoubleDouble> d, std::span<const double> scale) {
  for (std::size_t k = 1; k < d.size(); ++k) {
    const double v = d[k].to_double();
    if (std::abs(v) > 1e-25 * scale[k]) return v > 0.0 ? 1 : -1;
  }
  return 0;
}

// Accumulates sum_{i+j=k} x_i x_j and its absolute counterpart into d/scale at k + shift.
void add_square(std::span<const DoubleDouble> x, std::size_t shift, std::vector<DoubleDouble>& d,
                std::vector<double>& scale) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const std::size_t k = i + j + shift;
      d[k] += x[i] * x[j];
      scale[k] += std::abs(x[i].to_double() * x[j].to_double());
    }
  }
}

// +1 when |P|^2 - 1 starts out positive moving away from 0 along the axis.
int germ_growth(const RealPolynomial& p, Axis axis) {
  const auto c = p.coefficients();
  if (axis == Axis::negative_real) {
    std::vector<DoubleDouble> g;
    for (std::size_t j = 0; j < c.size(); ++j) g.push_back(j % 2 == 0 ? c[j] : -c[j]);
    std::vector<DoubleDouble> d(2 * c.size() - 1, DoubleDouble(0.0));
    std::vector<double> scale(d.size(), 0.0);
    add_square(g, 0, d, scale);
    return leading_sign(d, scale);
  }
  std::vector<DoubleDouble> r;
  std::vector<DoubleDouble> im;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const bool negate = (j / 2) % 2 == 1;
    (j % 2 == 0 ? r : im).push_back(negate ? -c[j] : c[j]);
  }
  std::vector<DoubleDouble> d(c.size() + 1, DoubleDouble(0.0));
  std::vector<double> scale(d.size(), 0.0);
  add_square(r, 0, d, scale);
  add_square(im, 1, d, scale);
  return leading_sign(d, scale);
}

}  // namespace

void ButcherTableau::validate() const {
  const std::size_t s = b.size();
  if (s == 0 || A.size() != s || c.size() != s) {
    throw DomainError("malformed_tableau", "A, b and c must all have s >= 1 entries");
  }
  double bsum = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    if (A[i].size() != s) throw DomainError("malformed_tableau", "A must be square");
    double row = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
      if (j >= i && A[i][j] != 0.0) {
        throw DomainError("implicit_tableau",
                          "A(" + std::to_string(i) + "," + std::to_string(j) + ") must be zero for an explicit method");
      }
      row += A[i][j];
    }
    if (std::abs(row - c[i]) > kTableauTol) {
      throw DomainError("inconsistent_tableau", "c(" + std::to_string(i) + ") is not the row sum of A");
    }
    bsum += b[i];
  }
  if (std::abs(bsum - 1.0) > kTableauTol) throw DomainError("inconsistent_tableau", "weights b do not sum to 1");
}

ButcherTableau euler_tableau() { return {{{0.0}}, {1.0}, {0.0}}; }

ButcherTableau rk4_tableau() {
  return {{{0.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.0}, {0.0, 0.5, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}},
          {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0},
          {0.0, 0.5, 0.5, 1.0}};
}

ButcherTableau tableau_for_polynomial(const RealPolynomial& p) {
  if (!consistency_check(p)) throw DomainError("inconsistent_polynomial", "P(0) = P'(0) = 1 is required");
  const std::size_t s = p.degree();
  for (std::size_t j = 1; j <= s; ++j) {
    if (p.coefficient(j).is_zero()) {
      throw DomainError("unsupported_polynomial", "chain tableau needs every coefficient up to the degree nonzero");
    }
  }
  ButcherTableau t;
  t.A.assign(s, std::vector<double>(s, 0.0));
  t.b.assign(s, 0.0);
  t.c.assign(s, 0.0);
  t.b[s - 1] = 1.0;
  // b^T A^j 1 telescopes to c_{j+1} along the subdiagonal chain.
  for (std::size_t i = 1; i < s; ++i) {
    t.A[i][i - 1] = (p.coefficient(s - i + 1) / p.coefficient(s - i)).to_double();
    t.c[i] = t.A[i][i - 1];
  }
  return t;
}

std::string_view to_string(Axis axis) { return axis == Axis::negative_real ? "real" : "imag"; }

Complex RegionGrid::center(std::size_t ix, std::size_t iy) const {
  const double dx = (box.re_max - box.re_min) / static_cast<double>(nx);
  const double dy = (box.im_max - box.im_min) / static_cast<double>(ny);
  return {box.re_min + (static_cast<double>(ix) + 0.5) * dx, box.im_min + (static_cast<double>(iy) + 0.5) * dy};
}

RealPolynomial stability_polynomial(const ButcherTableau& t) {
  t.validate();
  const std::size_t s = t.stages();
  std::vector<DoubleDouble> v(s, DoubleDouble(1.0));
  std::vector<DoubleDouble> coeffs{DoubleDouble(1.0)};
  for (std::size_t j = 0; j < s; ++j) {
    DoubleDouble dot(0.0);
    for (std::size_t i = 0; i < s; ++i) dot += v[i] * t.b[i];
    coeffs.push_back(dot);
    std::vector<DoubleDouble> next(s, DoubleDouble(0.0));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < i; ++k) next[i] += v[k] * t.A[i][k];
    v = std::move(next);
  }
  return RealPolynomial(std::move(coeffs));
}

double axis_max(const RealPolynomial& p, Axis axis, double a, std::size_t samples) {
  // Real coefficients make |P(iy)| even in y, so [0, a] covers [-ia, ia].
  if (axis == Axis::negative_real) {
    return maximize_on_interval([&p](double t) { const double v = p(-t); return v * v; }, 0.0, a, samples);
  }
  return maximize_on_interval([&p](double y) { return std::norm(p.eval_imag(y)); }, 0.0, a, samples);
}

double stability_width(const RealPolynomial& p, Axis axis, const WidthOptions& opts) {
  if (germ_growth(p, axis) > 0) return 0.0;
  const auto ok = [&](double a) { return axis_max(p, axis, a, opts.samples) <= 1.0 + opts.eps; };
  const double m = static_cast<double>(std::max<std::size_t>(p.degree(), 1));
  const double cap = 8.0 * m * m;

  double lo = 0.0;
  double hi = 1.0;
  if (ok(hi)) {
    while (true) {
      lo = hi;
      if (lo >= cap) return cap;
      hi = std::min(2.0 * lo, cap);
      if (!ok(hi)) break;
    }
  }
  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

double disc_boundary_max(const RealPolynomial& p, unsigned m, std::size_t samples) {
  const double r = static_cast<double>(m);
  // z = m (e^{i theta} - 1), written without cancellation near theta = 0.
  const auto f = [&](double theta) {
    const double h = std::sin(0.5 * theta);
    return std::abs(p(Complex(-2.0 * r * h * h, r * std::sin(theta))));
  };
  return maximize_on_interval(f, 0.0, std::numbers::pi, samples);
}

RegionGrid region_scan(const RealPolynomial& p, const RegionBox& box, std::size_t nx, std::size_t ny,
                       unsigned workers) {
  if (!(box.re_min < box.re_max) || !(box.im_min < box.im_max) || nx == 0 || ny == 0) {
    throw DomainError("bad_box", "need re_min < re_max, im_min < im_max and positive nx, ny");
  }
  if (static_cast<double>(nx) * static_cast<double>(ny) > 1e8) {
    throw DomainError("grid_too_large", "nx * ny must not exceed 1e8");
  }
  RegionGrid grid{box, nx, ny, std::vector<double>(nx * ny)};
  const auto fill_rows = [&](std::size_t first, std::size_t last) {
    for (std::size_t iy = first; iy < last; ++iy)
      for (std::size_t ix = 0; ix < nx; ++ix) grid.values[iy * nx + ix] = std::abs(p(grid.center(ix, iy)));
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, ny));
  if (workers <= 1) {
    fill_rows(0, ny);
    return grid;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (ny + workers - 1) / workers;
  for (std::size_t first = 0; first < ny; first += chunk) pool.emplace_back(fill_rows, first, std::min(ny, first + chunk));
  pool.clear();
  return grid;
}

bool consistency_check(const RealPolynomial& p) {
  return std::abs(p[0] - 1.0) <= 1e-12 && std::abs(p[1] - 1.0) <= 1e-12;
}

RealPolynomial imaginary_modulus_squared(const RealPolynomial& p) {
  const auto c = p.coefficients();
  std::vector<DoubleDouble> r;
  std::vector<DoubleDouble> im;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const bool negate = (j / 2) % 2 == 1;
    (j % 2 == 0 ? r : im).push_back(negate ? -c[j] : c[j]);
  }
  const RealPolynomial rp(std::move(r));
  const RealPolynomial ip(std::move(im));
  return rp * rp + RealPolynomial{0.0, 1.0} * ip * ip;
}

StabilityReport stability_report(const RealPolynomial& p, unsigned m, const WidthOptions& opts) {
  return {stability_width(p, Axis::negative_real, opts), stability_width(p, Axis::imaginary, opts),
          disc_boundary_max(p, m, opts.samples), opts.tol};
}

}  // namespace optstab
