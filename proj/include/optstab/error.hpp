#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace optstab {

/// Violated precondition on a domain value (bad degree, inconsistent tableau, ...).
/// `code()` is a short machine-readable tag such as "m_too_small".
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string code, const std::string& detail)
      : std::invalid_argument(detail), code_(std::move(code)) {}

  [[nodiscard]] const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace optstab
