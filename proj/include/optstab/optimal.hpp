#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "optstab/poly.hpp"

namespace optstab {

/// Divisors of a composed-Euler step: substep i advances by h / xi[i], in order.
struct SubstepSchedule {
  unsigned m = 0;
  std::vector<double> xi;
  std::string order = "ascending";

  /// Throws DomainError("invalid_schedule") unless every xi > 0 and
  /// sum 1/xi = 1 within 1e-10.
  void validate() const;
};

/// (1 + z/m)^m: the only consistent degree-m polynomial stable on |1 + z/m| <= 1.
[[nodiscard]] RealPolynomial disc_optimal(unsigned m);

/// T_m(1 + z/m^2), stable on [-2m^2, 0].
[[nodiscard]] RealPolynomial parabolic_optimal(unsigned m);

/// xi_i = m^2 (1 - cos(pi (2i - 1) / (2m))), ascending.
[[nodiscard]] SubstepSchedule parabolic_substeps(unsigned m);

/// Same divisors applied in the order given by perm (a permutation of 0..m-1).
[[nodiscard]] SubstepSchedule reorder(const SubstepSchedule& s, std::span<const std::size_t> perm,
                                      std::string label = "custom");

/// T_m(1 - z/(2m^2)) for second-order problems, z = (h omega)^2; stable on [0, 4m^2].
[[nodiscard]] RealPolynomial second_order_optimal(unsigned m);

/// Optimal imaginary-interval polynomial, stable on [-i(m-1), i(m-1)].
/// Dispatches to the odd/even constructors. Throws DomainError("m_too_small") for m < 2.
[[nodiscard]] RealPolynomial hyperbolic_optimal(unsigned m);

/// Expansion of the unified form
///   i^{m-1} T_{m-1}(z/(i(m-1))) + i^{m-2} (1 + z^2/(m-1)^2) U_{m-2}(z/(i(m-1)))
/// with complex coefficients; the imaginary parts are checked to vanish.
[[nodiscard]] RealPolynomial hyperbolic_optimal_general(unsigned m);

/// m = 2k + 1: T_k(1 + z^2/(2k^2)) + (z/k)(1 + z^2/(4k^2)) U_{k-1}(1 + z^2/(2k^2)).
[[nodiscard]] RealPolynomial hyperbolic_optimal_odd(unsigned k);

/// m = 2k: (-1)^{k-1} [(1 + z^2/(2k-1)^2) U_{2k-2}(w) + i T_{2k-1}(w)], w = z/(i(2k-1)).
[[nodiscard]] RealPolynomial hyperbolic_optimal_even(unsigned k);

// Pointwise evaluation of the closed forms without expanding coefficients.

/// (-1)^k [T_{2k}(w) - i (1 + z^2/(4k^2)) U_{2k-1}(w)], w = z/(2ki).
[[nodiscard]] Complex eval_hyperbolic_odd_alt(unsigned k, Complex z);
/// (-1)^{k-1} [(1 + z^2/(2k-1)^2) U_{2k-2}(w) + i T_{2k-1}(w)], w = z/(i(2k-1)).
[[nodiscard]] Complex eval_hyperbolic_even(unsigned k, Complex z);
/// The unified form at a point.
[[nodiscard]] Complex eval_hyperbolic_general(unsigned m, Complex z);
/// Real part R(y) of P(i sqrt(y)) for m = 2k:
/// (-1)^{k-1} (1 - y/(2k-1)^2) U_{2k-2}(sqrt(y)/(2k-1)).
[[nodiscard]] double hyperbolic_even_real_part(unsigned k, double y);

}  // namespace optstab
