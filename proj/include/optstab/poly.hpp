#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "optstab/double_double.hpp"

namespace optstab {

using Complex = std::complex<double>;

/// Real polynomial in ascending powers, coeffs[j] multiplies z^j.
///
/// Canonical form: trailing coefficients that are exactly zero are stripped,
/// except that the zero polynomial keeps a single [0]. No tolerance is applied
/// when stripping since the degree is the method's cost.
class RealPolynomial {
 public:
  RealPolynomial() : coeffs_{DoubleDouble(0.0)} {}
  RealPolynomial(std::initializer_list<double> coeffs);
  explicit RealPolynomial(std::span<const double> coeffs);
  explicit RealPolynomial(std::vector<DoubleDouble> coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

  /// Coefficient rounded to double; zero past the degree.
  [[nodiscard]] double operator[](std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j].to_double() : 0.0;
  }
  [[nodiscard]] DoubleDouble coefficient(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : DoubleDouble(0.0);
  }
  [[nodiscard]] std::span<const DoubleDouble> coefficients() const { return coeffs_; }
  [[nodiscard]] std::vector<double> coeffs() const;

  /// Horner evaluation, carried out in double-double and rounded at the end.
  [[nodiscard]] Complex operator()(Complex z) const;
  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] DoubleDouble eval_dd(double x) const;
  /// P(iy), using the even/odd split so only real Horner passes are needed.
  [[nodiscard]] Complex eval_imag(double y) const;

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  void canonicalize();
  std::vector<DoubleDouble> coeffs_;
};

[[nodiscard]] Complex eval_complex(const RealPolynomial& p, Complex z);

[[nodiscard]] RealPolynomial derivative(const RealPolynomial& p);
[[nodiscard]] RealPolynomial multiply(const RealPolynomial& p, const RealPolynomial& q);
[[nodiscard]] RealPolynomial add(const RealPolynomial& p, const RealPolynomial& q);
[[nodiscard]] RealPolynomial scale(const RealPolynomial& p, DoubleDouble s);

inline RealPolynomial operator*(const RealPolynomial& p, const RealPolynomial& q) { return multiply(p, q); }
inline RealPolynomial operator+(const RealPolynomial& p, const RealPolynomial& q) { return add(p, q); }
inline RealPolynomial operator-(const RealPolynomial& p, const RealPolynomial& q) {
  return add(p, scale(q, DoubleDouble(-1.0)));
}

/// q(z) = p(a + b z), expanded by synthetic substitution. With b = 0 the result
/// is the constant p(a).
[[nodiscard]] RealPolynomial affine_compose(const RealPolynomial& p, DoubleDouble a, DoubleDouble b);

/// q(z) = p(z^2).
[[nodiscard]] RealPolynomial compose_square(const RealPolynomial& p);

/// prod_i (1 + z / xi_i). Throws DomainError("nonpositive_root") unless every xi_i > 0.
[[nodiscard]] RealPolynomial from_real_roots(std::span<const double> negated_roots);

/// Chebyshev polynomials by three-term recurrence; integer coefficients are exact.
[[nodiscard]] RealPolynomial chebyshev_t(unsigned k);
[[nodiscard]] RealPolynomial chebyshev_u(unsigned k);

/// Polynomial with complex double-double coefficients. Only used as an
/// intermediate when expanding closed forms that mix i and real arithmetic.
class ComplexPolynomial {
 public:
  ComplexPolynomial() : coeffs_{ComplexDD{}} {}
  explicit ComplexPolynomial(std::vector<ComplexDD> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(ComplexDD{});
  }
  explicit ComplexPolynomial(const RealPolynomial& p);

  [[nodiscard]] std::span<const ComplexDD> coefficients() const { return coeffs_; }
  [[nodiscard]] Complex operator()(Complex z) const;

  /// Real part, after checking max |Im| <= rel_tol * max |Re|.
  /// Throws std::logic_error when the check fails.
  [[nodiscard]] RealPolynomial real_part_checked(double rel_tol) const;
  [[nodiscard]] double max_imag_ratio() const;

 private:
  std::vector<ComplexDD> coeffs_;
};

[[nodiscard]] ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q);
[[nodiscard]] ComplexPolynomial add(const ComplexPolynomial& p, const ComplexPolynomial& q);
[[nodiscard]] ComplexPolynomial scale(const ComplexPolynomial& p, ComplexDD s);
/// q(z) = p(s z).
[[nodiscard]] ComplexPolynomial compose_scale(const ComplexPolynomial& p, ComplexDD s);

}  // namespace optstab
