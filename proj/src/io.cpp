#include "optstab/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "optstab/error.hpp"

namespace optstab::io {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError("parse_error", std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw DomainError("parse_error", std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

json to_json(const RealPolynomial& p) {
  json coeffs = json::array();
  json lows = json::array();
  bool any_low = false;
  for (const auto& c : p.coefficients()) {
    coeffs.push_back(c.hi);
    lows.push_back(c.lo);
    any_low = any_low || c.lo != 0.0;
  }
  json out{{"degree", p.degree()}, {"coeffs", coeffs}};
  if (any_low) out["coeffs_lo"] = lows;
  return out;
}

json to_json(const SubstepSchedule& s) { return {{"m", s.m}, {"xi", s.xi}, {"order", s.order}}; }

json to_json(const ButcherTableau& t) { return {{"A", t.A}, {"b", t.b}, {"c", t.c}}; }

json to_json(const StabilityReport& r) {
  return {{"real_width", r.real_width}, {"imag_width", r.imag_width}, {"disc_max", r.disc_max},
          {"tolerance", r.tolerance}};
}

json to_json(const OracleResult& r) {
  json out{{"best_width", r.best_width},
           {"best_coeffs", r.best_coeffs},
           {"grid_step", r.grid_step},
           {"evaluations", r.evaluations}};
  if (!r.feasible.empty()) out["feasible"] = r.feasible;
  return out;
}

RealPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw DomainError("parse_error", "polynomial needs a coeffs array");
  const auto hi = number_array(j.at("coeffs"), "coeffs");
  if (hi.empty()) throw DomainError("parse_error", "coeffs must not be empty");
  std::vector<double> lo(hi.size(), 0.0);
  if (j.contains("coeffs_lo")) {
    lo = number_array(j.at("coeffs_lo"), "coeffs_lo");
    if (lo.size() != hi.size()) throw DomainError("parse_error", "coeffs_lo must match coeffs in length");
  }
  std::vector<DoubleDouble> c;
  for (std::size_t i = 0; i < hi.size(); ++i) c.push_back(DoubleDouble(hi[i]) + DoubleDouble(lo[i]));
  RealPolynomial p(std::move(c));
  if (j.contains("degree") && (!j.at("degree").is_number_integer() || j.at("degree").get<long long>() != static_cast<long long>(p.degree()))) {
    throw DomainError("parse_error", "degree does not match the coefficients");
  }
  return p;
}

ButcherTableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b") || !j.contains("c")) {
    throw DomainError("parse_error", "tableau needs A, b and c");
  }
  ButcherTableau t;
  if (!j.at("A").is_array()) throw DomainError("parse_error", "A must be an array of rows");
  for (const auto& row : j.at("A")) t.A.push_back(number_array(row, "A row"));
  t.b = number_array(j.at("b"), "b");
  t.c = number_array(j.at("c"), "c");
  return t;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io_error", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("parse_error", path + ": " + e.what());
  }
}

void write_region_csv(std::ostream& os, const RegionGrid& grid) {
  os << "re,im,absP\n";
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Complex z = grid.center(ix, iy);
      os << num(z.real()) << ',' << num(z.imag()) << ',' << num(grid.at(ix, iy)) << '\n';
    }
  }
}

void write_region_pgm(std::ostream& os, const RegionGrid& grid) {
  os << "P2\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  for (std::size_t row = 0; row < grid.ny; ++row) {
    const std::size_t iy = grid.ny - 1 - row;
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const double v = grid.at(ix, iy);
      const int level = static_cast<int>(std::lround(255.0 * std::clamp(v - 1.0, 0.0, 1.0)));
      os << level << (ix + 1 == grid.nx ? '\n' : ' ');
    }
  }
}

void write_run_csv(std::ostream& os, const RunRecord& r) {
  os << "step,norm\n";
  for (std::size_t k = 0; k < r.norm_history.size(); ++k) os << k << ',' << num(r.norm_history[k]) << '\n';
  if (r.aborted) os << "# aborted_at=" << r.steps_taken << '\n';
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace optstab::io
