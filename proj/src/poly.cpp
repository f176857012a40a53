#include "optstab/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "optstab/error.hpp"

namespace optstab {

RealPolynomial::RealPolynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  canonicalize();
}

RealPolynomial::RealPolynomial(std::span<const double> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  canonicalize();
}

RealPolynomial::RealPolynomial(std::vector<DoubleDouble> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

void RealPolynomial::canonicalize() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(DoubleDouble(0.0));
}

std::vector<double> RealPolynomial::coeffs() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_double());
  return out;
}

DoubleDouble RealPolynomial::eval_dd(double x) const {
  DoubleDouble acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RealPolynomial::operator()(double x) const { return eval_dd(x).to_double(); }

Complex RealPolynomial::operator()(Complex z) const {
  const double zr = z.real();
  const double zi = z.imag();
  DoubleDouble re = coeffs_.back();
  DoubleDouble im(0.0);
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    const DoubleDouble nre = re * zr - im * zi + *it;
    im = re * zi + im * zr;
    re = nre;
  }
  return {re.to_double(), im.to_double()};
}

Complex RealPolynomial::eval_imag(double y) const {
  // P(iy) = E(-y^2) + i y O(-y^2) with E, O the even and odd coefficient halves.
  const DoubleDouble w = -dd_detail::two_prod(y, y);
  const std::size_t n = coeffs_.size();
  DoubleDouble even(0.0);
  DoubleDouble odd(0.0);
  for (std::size_t j = n; j-- > 0;) {
    if (j % 2 == 0)
      even = even * w + coeffs_[j];
    else
      odd = odd * w + coeffs_[j];
  }
  return {even.to_double(), (odd * y).to_double()};
}

Complex eval_complex(const RealPolynomial& p, Complex z) { return p(z); }

RealPolynomial derivative(const RealPolynomial& p) {
  const auto c = p.coefficients();
  if (c.size() == 1) return RealPolynomial{};
  std::vector<DoubleDouble> d;
  d.reserve(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d.push_back(c[j] * static_cast<double>(j));
  return RealPolynomial(std::move(d));
}

RealPolynomial multiply(const RealPolynomial& p, const RealPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return RealPolynomial{};
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<DoubleDouble> out(a.size() + b.size() - 1, DoubleDouble(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return RealPolynomial(std::move(out));
}

RealPolynomial add(const RealPolynomial& p, const RealPolynomial& q) {
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<DoubleDouble> out(std::max(a.size(), b.size()), DoubleDouble(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return RealPolynomial(std::move(out));
}

RealPolynomial scale(const RealPolynomial& p, DoubleDouble s) {
  std::vector<DoubleDouble> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) c *= s;
  return RealPolynomial(std::move(out));
}

RealPolynomial affine_compose(const RealPolynomial& p, DoubleDouble a, DoubleDouble b) {
  const auto c = p.coefficients();
  std::vector<DoubleDouble> q{c.back()};
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    std::vector<DoubleDouble> next(q.size() + 1, DoubleDouble(0.0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i] += a * q[i];
      next[i + 1] += b * q[i];
    }
    next[0] += c[j];
    q = std::move(next);
  }
  return RealPolynomial(std::move(q));
}

RealPolynomial compose_square(const RealPolynomial& p) {
  const auto c = p.coefficients();
  std::vector<DoubleDouble> out(2 * c.size() - 1, DoubleDouble(0.0));
  for (std::size_t j = 0; j < c.size(); ++j) out[2 * j] = c[j];
  return RealPolynomial(std::move(out));
}

RealPolynomial from_real_roots(std::span<const double> negated_roots) {
  RealPolynomial out{1.0};
  for (double xi : negated_roots) {
    if (!(xi > 0.0)) {
      throw DomainError("nonpositive_root", "divisor " + std::to_string(xi) + " must be positive");
    }
    out = multiply(out, RealPolynomial(std::vector<DoubleDouble>{DoubleDouble(1.0), DoubleDouble(1.0) / xi}));
  }
  return out;
}

namespace {

// T_{k+1} = 2x T_k - T_{k-1} with caller-supplied first two terms.
RealPolynomial chebyshev_recurrence(unsigned k, RealPolynomial p0, RealPolynomial p1) {
  if (k == 0) return p0;
  const RealPolynomial two_x{0.0, 2.0};
  for (unsigned j = 1; j < k; ++j) {
    RealPolynomial next = multiply(two_x, p1) - p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

}  // namespace

RealPolynomial chebyshev_t(unsigned k) { return chebyshev_recurrence(k, RealPolynomial{1.0}, RealPolynomial{0.0, 1.0}); }

RealPolynomial chebyshev_u(unsigned k) { return chebyshev_recurrence(k, RealPolynomial{1.0}, RealPolynomial{0.0, 2.0}); }

// ---------------------------------------------------------------------------
// ComplexPolynomial

ComplexPolynomial::ComplexPolynomial(const RealPolynomial& p) {
  for (const auto& c : p.coefficients()) coeffs_.push_back(ComplexDD{c, DoubleDouble(0.0)});
}

Complex ComplexPolynomial::operator()(Complex z) const {
  const ComplexDD zz{DoubleDouble(z.real()), DoubleDouble(z.imag())};
  ComplexDD acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * zz + *it;
  return {acc.re.to_double(), acc.im.to_double()};
}

double ComplexPolynomial::max_imag_ratio() const {
  double max_re = 0.0;
  double max_im = 0.0;
  for (const auto& c : coeffs_) {
    max_re = std::max(max_re, std::abs(c.re.to_double()));
    max_im = std::max(max_im, std::abs(c.im.to_double()));
  }
  if (max_im == 0.0) return 0.0;
  return max_re == 0.0 ? std::numeric_limits<double>::infinity() : max_im / max_re;
}

RealPolynomial ComplexPolynomial::real_part_checked(double rel_tol) const {
  if (const double r = max_imag_ratio(); r > rel_tol) {
    throw std::logic_error("expansion left imaginary coefficients, relative size " + std::to_string(r));
  }
  std::vector<DoubleDouble> re;
  re.reserve(coeffs_.size());
  for (const auto& c : coeffs_) re.push_back(c.re);
  return RealPolynomial(std::move(re));
}

ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<ComplexDD> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial add(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<ComplexDD> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial scale(const ComplexPolynomial& p, ComplexDD s) {
  std::vector<ComplexDD> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) c = c * s;
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial compose_scale(const ComplexPolynomial& p, ComplexDD s) {
  std::vector<ComplexDD> out(p.coefficients().begin(), p.coefficients().end());
  ComplexDD power{DoubleDouble(1.0), DoubleDouble(0.0)};
  for (auto& c : out) {
    c = c * power;
    power = power * s;
  }
  return ComplexPolynomial(std::move(out));
}

}  // namespace optstab
