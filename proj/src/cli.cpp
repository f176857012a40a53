#include "optstab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "optstab/error.hpp"
#include "optstab/integrate.hpp"
#include "optstab/io.hpp"
#include "optstab/optimal.hpp"
#include "optstab/stability.hpp"
#include "optstab/verify.hpp"

namespace optstab {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // gen
  std::string family;
  unsigned m = 0;
  std::string out_path;
  // interval / region
  std::string poly_path;
  std::string axis;
  double eps = 1e-9;
  double tol = 1e-8;
  std::size_t samples = 4096;
  std::string box;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::string format = "csv";
  unsigned workers = 0;
  // verify
  std::string check;
  std::string target;
  std::string lo;
  std::string hi;
  double step = 1e-3;
  std::size_t random = 0;
  // simulate
  std::string scheme;
  std::string system;
  std::size_t n = 0;
  double h_frac = 0.0;
  std::size_t steps = 0;
  std::uint64_t seed = 1;
  double speed = 1.0;
  std::string file;
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError("io_error", "cannot write " + out_path);
  f << text;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a number");
    }
  }
  return out;
}

RealPolynomial family_polynomial(const std::string& family, unsigned m) {
  if (family == "disc") return disc_optimal(m);
  if (family == "parabolic") return parabolic_optimal(m);
  if (family == "second-order") return second_order_optimal(m);
  if (family == "hyperbolic") return hyperbolic_optimal(m);
  throw UsageError("unknown family " + family);
}

Axis parse_axis(const std::string& axis) { return axis == "imag" ? Axis::imaginary : Axis::negative_real; }

unsigned require_m(const Options& o) {
  if (o.m == 0) throw UsageError("--m is required");
  return o.m;
}

json verify_ratio(const Options& o, bool bernstein) {
  const auto ratio = [&](const RealPolynomial& p, unsigned m) {
    return bernstein ? bernstein_ratio(p, m, o.samples) : markov_ratio(p, m, o.samples);
  };
  RealPolynomial p;
  unsigned m = o.m;
  const bool custom = !o.poly_path.empty();
  if (custom) {
    p = io::polynomial_from_json(io::read_json_file(o.poly_path));
    if (m == 0) m = static_cast<unsigned>(std::max<std::size_t>(p.degree(), 1));
  } else {
    m = require_m(o);
    if (bernstein) {
      std::vector<double> c(m + 1, 0.0);
      c.back() = 1.0;
      p = RealPolynomial(c);
    } else {
      p = chebyshev_t(m);
    }
  }
  const double r = ratio(p, m);
  bool pass = r <= 1.0 + 1e-9 && (custom || std::abs(r - 1.0) <= 1e-10);
  json report{{"check", bernstein ? "bernstein" : "markov"}, {"m", m}, {"ratio", r}};
  if (o.random > 0) {
    double worst = 0.0;
    for (std::size_t k = 0; k < o.random; ++k) {
      const auto c = random_state(m + 1, o.seed + k);
      const RealPolynomial q(c);
      if (q.is_zero()) continue;
      worst = std::max(worst, ratio(q, m));
    }
    report["random_count"] = o.random;
    report["random_max_ratio"] = worst;
    pass = pass && worst <= 1.0 + 1e-9;
  }
  report["pass"] = pass;
  return report;
}

json verify_alpha(const Options& o) {
  const unsigned m = require_m(o);
  const std::string family = o.family.empty() ? "hyperbolic" : o.family;
  const RealPolynomial p = family_polynomial(family, m);
  if (p.degree() < 2) throw DomainError("degree_too_small", "alpha needs a polynomial of degree >= 2");
  const double alpha = alpha_coefficient(p);
  const RealPolynomial q = q_expansion(p);
  const double q_linear = q[1];
  const double width = stability_width(p, Axis::imaginary);
  const bool holds = lemma_holds(p);
  bool pass = holds && std::abs(q_linear - (1.0 - 2.0 * alpha)) <= 1e-12;
  if (family == "hyperbolic") pass = pass && (m % 2 == 1 ? alpha == 0.5 : alpha > 0.5);
  return {{"check", "alpha"}, {"family", family}, {"m", m},          {"alpha", alpha},
          {"q_linear", q_linear}, {"imag_width", width}, {"lemma_holds", holds}, {"pass", pass}};
}

json verify_q_identity(const Options& o) {
  const unsigned m = require_m(o);
  const RealPolynomial p = hyperbolic_optimal(m);
  const double kappa = m - 1.0;
  const std::size_t count = 1000;
  double trig_err = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(count - 1);
    const double lhs = std::norm(p.eval_imag(kappa * std::cos(theta)));
    const double s = std::sin(theta);
    const double rhs = std::pow(std::cos(kappa * theta), 2) + s * s * std::pow(std::sin(kappa * theta), 2);
    trig_err = std::max(trig_err, std::abs(lhs - rhs));
  }
  const RealPolynomial q = q_expansion(p);
  double q_err = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double y = kappa * kappa * static_cast<double>(i) / static_cast<double>(count - 1);
    const double qv = q(y);
    q_err = std::max(q_err, std::abs(qv - std::norm(p.eval_imag(std::sqrt(y)))) / (1.0 + std::abs(qv)));
  }
  return {{"check", "q-identity"}, {"m", m}, {"trig_max_error", trig_err}, {"q_max_rel_error", q_err},
          {"pass", trig_err <= 1e-10 && q_err <= 1e-12}};
}

json verify_oracle(const Options& o) {
  const unsigned m = require_m(o);
  OracleTarget target = OracleTarget::negative_real;
  RealPolynomial expected;
  if (o.target == "real" || o.target.empty()) {
    expected = parabolic_optimal(m);
  } else if (o.target == "imag") {
    target = OracleTarget::imaginary;
    expected = hyperbolic_optimal(m);
  } else {
    target = OracleTarget::disc;
    expected = disc_optimal(m);
  }
  const auto lo = parse_list(o.lo, "--lo");
  const auto hi = parse_list(o.hi, "--hi");
  if (lo.size() != hi.size()) throw UsageError("--lo and --hi need the same number of entries");
  std::vector<CoeffRange> box;
  for (std::size_t i = 0; i < lo.size(); ++i) box.push_back({lo[i], hi[i]});
  const OracleResult r = oracle_search(m, target, box, o.step, o.workers);

  const auto near = [&](const std::vector<double>& c) {
    for (std::size_t j = 2; j < c.size(); ++j)
      if (std::abs(c[j] - expected[j]) > o.step * (1.0 + 1e-9)) return false;
    return true;
  };
  bool pass = near(r.best_coeffs);
  if (target == OracleTarget::disc) {
    pass = pass && !r.feasible.empty() && std::all_of(r.feasible.begin(), r.feasible.end(), near);
  }
  json report = io::to_json(r);
  report["check"] = "oracle";
  report["m"] = m;
  report["expected_coeffs"] = expected.coeffs();
  report["pass"] = pass;
  return report;
}

std::string simulate(const Options& o) {
  const unsigned m = require_m(o);
  if (o.n == 0 || o.steps == 0) throw UsageError("--n and --steps are required");
  if (!(o.h_frac > 0.0)) throw UsageError("--h-frac must be positive");
  const bool heat = o.system == "heat";
  const LinearSystem sys = heat ? heat_system(o.n) : advection_system(o.n, o.speed);
  const auto x0 = random_state(sys.dimension, o.seed);

  RunRecord rec;
  if (o.scheme == "composed") {
    const double h = o.h_frac * 2.0 * m * m / sys.lambda_extreme;
    rec = composed_euler_run(parabolic_substeps(m), sys, h, o.steps, x0);
  } else {
    ButcherTableau t;
    double limit = 0.0;
    if (!o.file.empty()) {
      t = io::tableau_from_json(io::read_json_file(o.file));
      limit = stability_width(stability_polynomial(t), heat ? Axis::negative_real : Axis::imaginary);
      if (!(limit > 0.0)) throw DomainError("zero_width", "tableau has no stability interval on this axis");
    } else {
      t = tableau_for_polynomial(heat ? parabolic_optimal(m) : hyperbolic_optimal(m));
      limit = heat ? 2.0 * m * m : m - 1.0;
    }
    rec = rk_run(t, sys, o.h_frac * limit / sys.lambda_extreme, o.steps, x0);
  }
  std::ostringstream os;
  io::write_run_csv(os, rec);
  return os.str();
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal stability polynomials for explicit integrators", "optstab"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Emit an optimal polynomial (or the parabolic substep schedule) as JSON");
  gen->add_option("--family", o.family, "Polynomial family")
      ->required()
      ->check(CLI::IsMember({"disc", "parabolic", "parabolic-substeps", "second-order", "hyperbolic"}));
  gen->add_option("--m", o.m, "Degree (number of f evaluations)")->required();
  gen->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* interval = app.add_subcommand("interval", "Measure the stability interval of a polynomial on one axis");
  interval->add_option("--poly", o.poly_path, "Polynomial JSON file")->required();
  interval->add_option("--axis", o.axis, "real: [-a, 0], imag: [-ia, ia]")
      ->required()
      ->check(CLI::IsMember({"real", "imag"}));
  interval->add_option("--eps", o.eps, "Slack on |P|^2 <= 1")->capture_default_str();
  interval->add_option("--tol", o.tol, "Bisection resolution")->capture_default_str();
  interval->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* region = app.add_subcommand("region", "Sample |P(z)| on a rectangle of the complex plane");
  region->add_option("--poly", o.poly_path, "Polynomial JSON file")->required();
  region->add_option("--box", o.box, "re_min,re_max,im_min,im_max")->required();
  region->add_option("--nx", o.nx, "Cells along the real axis")->required();
  region->add_option("--ny", o.ny, "Cells along the imaginary axis")->required();
  region->add_option("--format", o.format, "csv or pgm")->check(CLI::IsMember({"csv", "pgm"}))->capture_default_str();
  region->add_option("--workers", o.workers, "Worker threads (0: hardware concurrency)");
  region->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Numerical checks of the inequalities and optimality claims");
  verify->add_option("--check", o.check, "Which check to run")
      ->required()
      ->check(CLI::IsMember({"bernstein", "markov", "alpha", "oracle", "q-identity"}));
  verify->add_option("--m", o.m, "Degree");
  verify->add_option("--family", o.family, "Family for --check alpha (default hyperbolic)")
      ->check(CLI::IsMember({"disc", "parabolic", "second-order", "hyperbolic"}));
  verify->add_option("--poly", o.poly_path, "Custom polynomial for bernstein/markov");
  verify->add_option("--samples", o.samples, "Samples for maximum search")->capture_default_str();
  verify->add_option("--random", o.random, "Also test this many random polynomials (bernstein/markov)");
  verify->add_option("--seed", o.seed, "Seed for random polynomials")->capture_default_str();
  verify->add_option("--target", o.target, "Oracle target")->check(CLI::IsMember({"real", "imag", "disc"}));
  verify->add_option("--lo", o.lo, "Oracle lower bounds for a2[,a3]");
  verify->add_option("--hi", o.hi, "Oracle upper bounds for a2[,a3]");
  verify->add_option("--step", o.step, "Oracle grid step")->capture_default_str();
  verify->add_option("--workers", o.workers, "Oracle worker threads (0: hardware concurrency)");
  verify->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* sim = app.add_subcommand("simulate", "Time-step a linear test system and record the solution norm");
  sim->add_option("--scheme", o.scheme, "composed: parabolic Euler substeps; tableau: RK stage loop")
      ->required()
      ->check(CLI::IsMember({"composed", "tableau"}));
  sim->add_option("--system", o.system, "Test system")->required()->check(CLI::IsMember({"heat", "advection"}));
  sim->add_option("--n", o.n, "Grid points")->required();
  sim->add_option("--m", o.m, "Stages")->required();
  sim->add_option("--h-frac", o.h_frac, "Step size as a fraction of the theoretical limit")->required();
  sim->add_option("--steps", o.steps, "Macro steps")->required();
  sim->add_option("--seed", o.seed, "Seed for the initial state")->capture_default_str();
  sim->add_option("--c", o.speed, "Advection speed")->capture_default_str();
  sim->add_option("--file", o.file, "Tableau JSON for --scheme tableau (default: chain tableau of the optimum)");
  sim->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* tab = app.add_subcommand("tableau", "Stability polynomial and report of an explicit RK tableau");
  tab->add_option("--file", o.file, "Tableau JSON file")->required();
  tab->add_option("--out", o.out_path, "Output file (default: stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (*gen) {
      text = o.family == "parabolic-substeps" ? io::dump(io::to_json(parabolic_substeps(o.m)))
                                              : io::dump(io::to_json(family_polynomial(o.family, o.m)));
    } else if (*interval) {
      const RealPolynomial p = io::polynomial_from_json(io::read_json_file(o.poly_path));
      const double w = stability_width(p, parse_axis(o.axis), WidthOptions{o.eps, o.tol});
      text = io::dump(json{{"width", w}});
    } else if (*region) {
      const auto b = parse_list(o.box, "--box");
      if (b.size() != 4) throw UsageError("--box needs four comma-separated numbers");
      const RealPolynomial p = io::polynomial_from_json(io::read_json_file(o.poly_path));
      const RegionGrid grid = region_scan(p, {b[0], b[1], b[2], b[3]}, o.nx, o.ny, o.workers);
      std::ostringstream os;
      o.format == "pgm" ? io::write_region_pgm(os, grid) : io::write_region_csv(os, grid);
      text = os.str();
    } else if (*verify) {
      json report;
      if (o.check == "bernstein" || o.check == "markov") report = verify_ratio(o, o.check == "bernstein");
      if (o.check == "alpha") report = verify_alpha(o);
      if (o.check == "q-identity") report = verify_q_identity(o);
      if (o.check == "oracle") report = verify_oracle(o);
      text = io::dump(report);
    } else if (*sim) {
      text = simulate(o);
    } else if (*tab) {
      const ButcherTableau t = io::tableau_from_json(io::read_json_file(o.file));
      const RealPolynomial p = stability_polynomial(t);
      const auto m = static_cast<unsigned>(t.stages());
      text = io::dump(json{{"polynomial", io::to_json(p)}, {"report", io::to_json(stability_report(p, m))}});
    }
    emit(text, o.out_path, out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace optstab
