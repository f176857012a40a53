#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "optstab/poly.hpp"

namespace optstab {

/// max_{|mu|=1} |p'| / (m max_{|mu|=1} |p|). At most 1 for deg p <= m.
/// Throws DomainError: "zero_polynomial", "degree_exceeds_m".
[[nodiscard]] double bernstein_ratio(const RealPolynomial& p, unsigned m, std::size_t samples = 4096);

/// max_{[-1,1]} |p'| / (m^2 max_{[-1,1]} |p|). At most 1 for deg p <= m.
[[nodiscard]] double markov_ratio(const RealPolynomial& p, unsigned m, std::size_t samples = 4096);

/// Coefficient of z^2 of a consistent p. Throws DomainError("inconsistent_polynomial").
[[nodiscard]] double alpha_coefficient(const RealPolynomial& p);

/// A nonzero imaginary stability interval forces alpha >= 1/2.
[[nodiscard]] bool lemma_holds(const RealPolynomial& p);

/// Q(y) = |P(i sqrt(y))|^2 for consistent p; Q(0) = 1, Q'(0) = 1 - 2 alpha.
[[nodiscard]] RealPolynomial q_expansion(const RealPolynomial& p);

enum class OracleTarget { negative_real, imaginary, disc };

struct CoeffRange {
  double lo;
  double hi;
};

struct OracleResult {
  double best_width = 0.0;
  std::vector<double> best_coeffs;
  double grid_step = 0.0;
  std::size_t evaluations = 0;
  /// Disc target only: every candidate whose boundary maximum is <= 1 + 1e-9.
  std::vector<std::vector<double>> feasible;
};

/// Exhaustive grid over P(z) = 1 + z + a_2 z^2 (+ a_3 z^3), box[j] bounding a_{j+2}.
/// For the axis targets the score is the stability width (searched at tol 1e-6,
/// winner re-measured at default tol). For the disc target the score is
/// -disc_boundary_max and best_width is m when the winner is feasible, else 0.
/// Ties go to the lexicographically smallest coefficients.
/// Throws DomainError: "unsupported_degree" (m not 2 or 3), "invalid_argument", "empty_grid".
[[nodiscard]] OracleResult oracle_search(unsigned m, OracleTarget target, std::span<const CoeffRange> box,
                                         double step, unsigned workers = 0);

}  // namespace optstab
