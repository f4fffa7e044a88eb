#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotcx {

enum class ErrorKind {
  invalid_parameter,
  invalid_argument,
  invalid_slope,
  degenerate_slope,
  inconsistent_modulus,
  hypothesis_violation,
  missing_cable_data,
  parse_error,
  validation_error,
  internal_inconsistency,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_slope: return "invalid-slope";
    case ErrorKind::degenerate_slope: return "degenerate-slope";
    case ErrorKind::inconsistent_modulus: return "inconsistent-modulus";
    case ErrorKind::hypothesis_violation: return "hypothesis-violation";
    case ErrorKind::missing_cable_data: return "missing-cable-data";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::validation_error: return "validation-error";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind;
/// the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace knotcx
