#include "optstab/integrate.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "optstab/error.hpp"

namespace optstab {

namespace {

constexpr double kOverflowGuard = 1e12;

double norm2(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

double dot(std::span<const double> x, std::span<const double> y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

// Shared driver: `step` advances x in place by one macro step.
template <class Step>
RunRecord run(const LinearSystem& sys, std::size_t n_steps, std::span<const double> x0, double h, Step&& step) {
  if (x0.size() != sys.dimension) throw DomainError("dimension_mismatch", "x0 does not match the system dimension");
  if (!(h > 0.0)) throw DomainError("invalid_argument", "step size must be positive");
  std::vector<double> x(x0.begin(), x0.end());
  RunRecord rec;
  const double n0 = norm2(x);
  rec.norm_history.push_back(n0);
  for (std::size_t k = 0; k < n_steps; ++k) {
    step(x);
    const double nk = norm2(x);
    rec.norm_history.push_back(nk);
    rec.steps_taken = k + 1;
    if (!(nk <= kOverflowGuard * n0)) {
      rec.aborted = true;
      break;
    }
  }
  return rec;
}

}  // namespace

std::vector<double> LinearSystem::apply(std::span<const double> x) const {
  std::vector<double> out(dimension);
  matvec(x, out);
  return out;
}

LinearSystem heat_system(std::size_t n) {
  if (n < 2) throw DomainError("invalid_argument", "heat system needs n >= 2");
  const double dx = 1.0 / static_cast<double>(n + 1);
  const double inv = 1.0 / (dx * dx);
  LinearSystem sys;
  sys.dimension = n;
  sys.spectral_hint = SpectralHint::real_negative;
  const double s = std::sin(static_cast<double>(n) * std::numbers::pi / (2.0 * static_cast<double>(n + 1)));
  sys.lambda_extreme = 4.0 * inv * s * s;
  sys.matvec = [n, inv](std::span<const double> x, std::span<double> out) {
    for (std::size_t j = 0; j < n; ++j) {
      const double left = j > 0 ? x[j - 1] : 0.0;
      const double right = j + 1 < n ? x[j + 1] : 0.0;
      out[j] = (left - 2.0 * x[j] + right) * inv;
    }
  };
  return sys;
}

LinearSystem advection_system(std::size_t n, double c) {
  if (n < 3) throw DomainError("invalid_argument", "advection system needs n >= 3");
  if (!(c > 0.0)) throw DomainError("invalid_argument", "advection speed must be positive");
  const double dx = 1.0 / static_cast<double>(n);
  const double coef = c / (2.0 * dx);
  LinearSystem sys;
  sys.dimension = n;
  sys.spectral_hint = SpectralHint::imaginary;
  sys.lambda_extreme = c / dx;
  sys.matvec = [n, coef](std::span<const double> x, std::span<double> out) {
    for (std::size_t j = 0; j < n; ++j) out[j] = -coef * (x[(j + 1) % n] - x[(j + n - 1) % n]);
  };
  return sys;
}

RunRecord composed_euler_run(const SubstepSchedule& schedule, const LinearSystem& sys, double h,
                             std::size_t n_steps, std::span<const double> x0) {
  schedule.validate();
  std::vector<double> ax(sys.dimension);
  return run(sys, n_steps, x0, h, [&](std::vector<double>& x) {
    for (double xi : schedule.xi) {
      sys.matvec(x, ax);
      const double dt = h / xi;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += dt * ax[j];
    }
  });
}

RunRecord rk_run(const ButcherTableau& t, const LinearSystem& sys, double h, std::size_t n_steps,
                 std::span<const double> x0) {
  t.validate();
  const std::size_t s = t.stages();
  const std::size_t d = sys.dimension;
  std::vector<std::vector<double>> k(s, std::vector<double>(d));
  std::vector<double> stage(d);
  return run(sys, n_steps, x0, h, [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < s; ++i) {
      stage = x;
      for (std::size_t j = 0; j < i; ++j) {
        if (t.A[i][j] == 0.0) continue;
        const double w = h * t.A[i][j];
        for (std::size_t r = 0; r < d; ++r) stage[r] += w * k[j][r];
      }
      sys.matvec(stage, k[i]);
    }
    for (std::size_t i = 0; i < s; ++i) {
      const double w = h * t.b[i];
      for (std::size_t r = 0; r < d; ++r) x[r] += w * k[i][r];
    }
  });
}

RunRecord polynomial_run(const RealPolynomial& p, const LinearSystem& sys, double h, std::size_t n_steps,
                         std::span<const double> x0) {
  const std::vector<double> c = p.coeffs();
  std::vector<double> acc(sys.dimension);
  std::vector<double> ax(sys.dimension);
  return run(sys, n_steps, x0, h, [&](std::vector<double>& x) {
    for (std::size_t r = 0; r < x.size(); ++r) acc[r] = c.back() * x[r];
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      sys.matvec(acc, ax);
      for (std::size_t r = 0; r < x.size(); ++r) acc[r] = h * ax[r] + c[j] * x[r];
    }
    x.swap(acc);
  });
}

double growth_factor(const RunRecord& r) {
  if (r.norm_history.empty() || !(r.norm_history.front() > 0.0)) {
    throw DomainError("zero_state", "growth factor needs a nonzero initial state");
  }
  return r.norm_history.back() / r.norm_history.front();
}

std::vector<double> random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> x(n);
  for (auto& v : x) v = 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
  return x;
}

std::vector<std::vector<double>> to_dense(const LinearSystem& sys) {
  const std::size_t n = sys.dimension;
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<double> e(n, 0.0);
  std::vector<double> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    sys.matvec(e, col);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col[i];
  }
  return a;
}

bool probe_invariants(const LinearSystem& sys, std::uint64_t seed, std::size_t probes) {
  const std::size_t n = sys.dimension;
  for (std::size_t k = 0; k < probes; ++k) {
    const auto x = random_state(n, seed + 2 * k);
    const auto y = random_state(n, seed + 2 * k + 1);
    const double a = 0.75;
    const double b = -1.25;
    std::vector<double> combo(n);
    for (std::size_t i = 0; i < n; ++i) combo[i] = a * x[i] + b * y[i];
    const auto ax = sys.apply(x);
    const auto ay = sys.apply(y);
    const auto ac = sys.apply(combo);
    std::vector<double> diff(n);
    std::vector<double> ref(n);
    for (std::size_t i = 0; i < n; ++i) {
      ref[i] = a * ax[i] + b * ay[i];
      diff[i] = ac[i] - ref[i];
    }
    if (norm2(diff) > 1e-10 * std::max(1.0, norm2(ref))) return false;

    const double scale = sys.lambda_extreme * norm2(x) * norm2(y);
    if (sys.spectral_hint == SpectralHint::real_negative && dot(x, ax) > 1e-12 * scale) return false;
    if (sys.spectral_hint == SpectralHint::imaginary && std::abs(dot(x, ay) + dot(y, ax)) > 1e-12 * scale) {
      return false;
    }
  }
  return true;
}

}  // namespace optstab
