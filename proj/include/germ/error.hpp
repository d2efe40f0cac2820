#pragma once

#include <stdexcept>
#include <string>

namespace germ {

enum class ErrorKind {
  syntax,
  unknown_symbol,
  non_integer_exponent,
  invalid_argument,
  degenerate,
  zero_polynomial,
  unit_germ,
  precision,
  truncation,
  infinite_multiplicity,
  non_isolated,
  not_squarefree,
  retries_exhausted,
  branch_in_axis,
  radii,
  tracking,
  invalid_pairing,
  incompatible_rotation,
  internal,
};

const char* to_string(ErrorKind kind);

/// All library failures are reported through this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::unknown_symbol: return "unknown symbol";
    case ErrorKind::non_integer_exponent: return "non-integer exponent";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::degenerate: return "degenerate input";
    case ErrorKind::zero_polynomial: return "zero polynomial";
    case ErrorKind::unit_germ: return "unit germ";
    case ErrorKind::precision: return "precision insufficient";
    case ErrorKind::truncation: return "truncation too small";
    case ErrorKind::infinite_multiplicity: return "infinite intersection multiplicity";
    case ErrorKind::non_isolated: return "non-isolated critical point";
    case ErrorKind::not_squarefree: return "not squarefree";
    case ErrorKind::retries_exhausted: return "retries exhausted";
    case ErrorKind::branch_in_axis: return "branch inside {v=0}";
    case ErrorKind::radii: return "radius selection failed";
    case ErrorKind::tracking: return "tracking failed";
    case ErrorKind::invalid_pairing: return "invalid pairing";
    case ErrorKind::incompatible_rotation: return "rotation incompatible with pairing";
    case ErrorKind::internal: return "internal error";
  }
  return "error";
}

}  // namespace germ
