#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace optstab {

/// Runs one command (args exclude the program name). Returns 0 on success,
/// 1 on a domain error (one JSON line {"error", "detail"} on `err`) and 2 on
/// a usage error. Results go to `out` unless --out names a file.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace optstab
