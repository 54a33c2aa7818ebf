#pragma once

#include <stdexcept>
#include <string>

namespace mmt {

// Raised when a caller breaks an operation's precondition on otherwise
// well-formed data (e.g. asking to expand an admissible word).
class contract_violation : public std::logic_error {
 public:
  explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

// Raised by series inversion when the degree-0 part is not exactly 1.
class non_invertible_error : public std::domain_error {
 public:
  explicit non_invertible_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace mmt
