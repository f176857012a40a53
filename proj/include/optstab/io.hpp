#pragma once

// File formats shared by the library and the command-line tool.
//
//   polynomial  {"degree": m, "coeffs": [c0, ..., cm], "coeffs_lo": [...]}
//               coeffs are the double-rounded coefficients; the optional
//               coeffs_lo carries the low halves of the double-double values
//               so a round trip is exact.
//   schedule    {"m": m, "xi": [...], "order": "ascending"}
//   tableau     {"A": [[...]], "b": [...], "c": [...]}
//   oracle      {"best_width": w, "best_coeffs": [...], "grid_step": s, "evaluations": n}
//   region CSV  header "re,im,absP", one row per cell, row-major
//   region PGM  plain P2, 0 for |P| <= 1 ramping linearly to 255 at |P| >= 2
//   run CSV     header "step,norm"; trailing "# aborted_at=<k>" if the guard fired

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "optstab/integrate.hpp"
#include "optstab/optimal.hpp"
#include "optstab/poly.hpp"
#include "optstab/stability.hpp"
#include "optstab/verify.hpp"

namespace optstab::io {

using nlohmann::json;

[[nodiscard]] json to_json(const RealPolynomial& p);
[[nodiscard]] json to_json(const SubstepSchedule& s);
[[nodiscard]] json to_json(const ButcherTableau& t);
[[nodiscard]] json to_json(const StabilityReport& r);
[[nodiscard]] json to_json(const OracleResult& r);

/// Throws DomainError("parse_error") on malformed input.
[[nodiscard]] RealPolynomial polynomial_from_json(const json& j);
[[nodiscard]] ButcherTableau tableau_from_json(const json& j);

/// Throws DomainError("io_error") when the file cannot be read, "parse_error" on bad JSON.
[[nodiscard]] json read_json_file(const std::string& path);

void write_region_csv(std::ostream& os, const RegionGrid& grid);
/// Top image row is the largest imaginary part.
void write_region_pgm(std::ostream& os, const RegionGrid& grid);
void write_run_csv(std::ostream& os, const RunRecord& r);

/// Compact JSON text with a trailing newline.
[[nodiscard]] std::string dump(const json& j);

}  // namespace optstab::io
