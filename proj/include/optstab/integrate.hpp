#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "optstab/optimal.hpp"
#include "optstab/poly.hpp"
#include "optstab/stability.hpp"

namespace optstab {

enum class SpectralHint { real_negative, imaginary, general };

/// x' = A x with A known only through its action.
struct LinearSystem {
  std::size_t dimension = 0;
  std::function<void(std::span<const double> x, std::span<double> out)> matvec;
  SpectralHint spectral_hint = SpectralHint::general;
  double lambda_extreme = 0.0;  ///< largest |eigenvalue|

  [[nodiscard]] std::vector<double> apply(std::span<const double> x) const;
};

/// Second differences on n interior points of [0, 1], Dirichlet ends, dx = 1/(n+1).
/// Throws DomainError("invalid_argument") for n < 2.
[[nodiscard]] LinearSystem heat_system(std::size_t n);

/// Periodic central differences for u_t + c u_x = 0, dx = 1/n.
/// Throws DomainError("invalid_argument") for n < 3 or c <= 0.
[[nodiscard]] LinearSystem advection_system(std::size_t n, double c);

struct RunRecord {
  std::size_t steps_taken = 0;
  std::vector<double> norm_history;  ///< 2-norm after each macro step, starting with x0
  bool aborted = false;              ///< norm passed 1e12 * |x0|
};

/// Each macro step applies x <- x + (h/xi_i) A x for the divisors in schedule order.
[[nodiscard]] RunRecord composed_euler_run(const SubstepSchedule& schedule, const LinearSystem& sys, double h,
                                           std::size_t n_steps, std::span<const double> x0);

/// Classical explicit RK stage loop.
[[nodiscard]] RunRecord rk_run(const ButcherTableau& t, const LinearSystem& sys, double h, std::size_t n_steps,
                               std::span<const double> x0);

/// x <- P(hA) x, by Horner's scheme with one matvec per degree.
[[nodiscard]] RunRecord polynomial_run(const RealPolynomial& p, const LinearSystem& sys, double h,
                                       std::size_t n_steps, std::span<const double> x0);

/// Final norm over initial norm. Throws DomainError("zero_state") when the run
/// started from zero or has no history.
[[nodiscard]] double growth_factor(const RunRecord& r);

/// Uniform entries in [-1, 1) from a 64-bit Mersenne Twister; identical across
/// platforms for a given seed.
[[nodiscard]] std::vector<double> random_state(std::size_t n, std::uint64_t seed);

/// Dense column-by-column materialisation of A (for small cross checks).
[[nodiscard]] std::vector<std::vector<double>> to_dense(const LinearSystem& sys);

/// Probe-based checks of the LinearSystem invariants: linearity to 1e-10
/// relative, x^T A x <= 0 for real_negative, |x^T A y + y^T A x| small for imaginary.
[[nodiscard]] bool probe_invariants(const LinearSystem& sys, std::uint64_t seed, std::size_t probes = 8);

}  // namespace optstab
