#include "optstab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "optstab/error.hpp"
#include "optstab/maximize.hpp"
#include "optstab/stability.hpp"

namespace optstab {

namespace {

void check_ratio_input(const RealPolynomial& p, unsigned m) {
  if (p.is_zero()) throw DomainError("zero_polynomial", "ratio undefined for the zero polynomial");
  if (m == 0 || p.degree() > m) throw DomainError("degree_exceeds_m", "need 1 <= deg p <= m");
}

void require_consistent(const RealPolynomial& p) {
  if (!consistency_check(p)) throw DomainError("inconsistent_polynomial", "P(0) = P'(0) = 1 is required");
}

constexpr double kDiscSlack = 1e-9;

struct Candidate {
  std::vector<double> coeffs;
  double score = -std::numeric_limits<double>::infinity();
  bool feasible = false;
};

}  // namespace

double bernstein_ratio(const RealPolynomial& p, unsigned m, std::size_t samples) {
  check_ratio_input(p, m);
  const RealPolynomial dp = derivative(p);
  // Real coefficients: |p(conj mu)| = |p(mu)|, so the upper half circle suffices.
  const auto on_circle = [](const RealPolynomial& q) {
    return [&q](double theta) { return std::abs(q(Complex(std::cos(theta), std::sin(theta)))); };
  };
  const double top = maximize_on_interval(on_circle(dp), 0.0, std::numbers::pi, samples);
  const double bottom = maximize_on_interval(on_circle(p), 0.0, std::numbers::pi, samples);
  return top / (m * bottom);
}

double markov_ratio(const RealPolynomial& p, unsigned m, std::size_t samples) {
  check_ratio_input(p, m);
  const RealPolynomial dp = derivative(p);
  const double top = maximize_on_interval([&dp](double x) { return std::abs(dp(x)); }, -1.0, 1.0, samples);
  const double bottom = maximize_on_interval([&p](double x) { return std::abs(p(x)); }, -1.0, 1.0, samples);
  return top / (double(m) * m * bottom);
}

double alpha_coefficient(const RealPolynomial& p) {
  require_consistent(p);
  return p[2];
}

bool lemma_holds(const RealPolynomial& p) {
  return stability_width(p, Axis::imaginary) <= 0.0 || alpha_coefficient(p) >= 0.5 - 1e-12;
}

RealPolynomial q_expansion(const RealPolynomial& p) {
  require_consistent(p);
  return imaginary_modulus_squared(p);
}

OracleResult oracle_search(unsigned m, OracleTarget target, std::span<const CoeffRange> box, double step,
                           unsigned workers) {
  if (m != 2 && m != 3) throw DomainError("unsupported_degree", "oracle search covers m = 2 and m = 3 only");
  if (box.size() != m - 1) throw DomainError("invalid_argument", "need one coefficient range per free coefficient");
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("invalid_argument", "step must be positive");

  std::vector<std::size_t> counts;
  for (const auto& r : box) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) throw DomainError("invalid_argument", "box must be finite");
    if (r.hi < r.lo) throw DomainError("empty_grid", "coefficient range is empty");
    counts.push_back(static_cast<std::size_t>(std::floor((r.hi - r.lo) / step + 1e-9)) + 1);
  }
  std::size_t total = 1;
  for (auto c : counts) total *= c;

  // Lexicographic index -> coefficients; grid values are lo + i*step, not accumulated.
  const auto coeffs_at = [&](std::size_t index) {
    std::vector<double> c{1.0, 1.0};
    std::vector<double> free(box.size());
    for (std::size_t j = box.size(); j-- > 0;) {
      free[j] = box[j].lo + static_cast<double>(index % counts[j]) * step;
      index /= counts[j];
    }
    c.insert(c.end(), free.begin(), free.end());
    return c;
  };

  WidthOptions search_opts;
  search_opts.tol = 1e-6;
  search_opts.samples = 1024;
  const auto evaluate = [&](const std::vector<double>& c) {
    const RealPolynomial p(c);
    Candidate out{c};
    switch (target) {
      case OracleTarget::negative_real: out.score = stability_width(p, Axis::negative_real, search_opts); break;
      case OracleTarget::imaginary: out.score = stability_width(p, Axis::imaginary, search_opts); break;
      case OracleTarget::disc: {
        const double mx = disc_boundary_max(p, m, 1024);
        out.score = -mx;
        out.feasible = mx <= 1.0 + kDiscSlack;
        break;
      }
    }
    return out;
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  std::vector<Candidate> chunk_best(workers);
  std::vector<std::vector<std::vector<double>>> chunk_feasible(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  const auto scan = [&](unsigned w) {
    const std::size_t first = w * chunk;
    const std::size_t last = std::min(total, first + chunk);
    for (std::size_t i = first; i < last; ++i) {
      Candidate c = evaluate(coeffs_at(i));
      if (c.feasible) chunk_feasible[w].push_back(c.coeffs);
      if (c.score > chunk_best[w].score) chunk_best[w] = std::move(c);
    }
  };
  if (workers <= 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  Candidate best;
  OracleResult result;
  for (unsigned w = 0; w < workers; ++w) {
    if (chunk_best[w].score > best.score) best = chunk_best[w];
    for (auto& f : chunk_feasible[w]) result.feasible.push_back(std::move(f));
  }

  const RealPolynomial winner(best.coeffs);
  result.best_coeffs = best.coeffs;
  result.grid_step = step;
  result.evaluations = total;
  switch (target) {
    case OracleTarget::negative_real: result.best_width = stability_width(winner, Axis::negative_real); break;
    case OracleTarget::imaginary: result.best_width = stability_width(winner, Axis::imaginary); break;
    case OracleTarget::disc: result.best_width = best.feasible ? double(m) : 0.0; break;
  }
  return result;
}

}  // namespace optstab
