#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace landen {

enum class ErrorKind {
  kInvalidInput,
  kNoConvergence,
  kDegenerateInput,
  kInsufficientData,
  kToleranceNotMet,
  kQuadratureFailure,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kNoConvergence: return "no-convergence";
    case ErrorKind::kDegenerateInput: return "degenerate-input";
    case ErrorKind::kInsufficientData: return "insufficient-data";
    case ErrorKind::kToleranceNotMet: return "tolerance-not-met";
    case ErrorKind::kQuadratureFailure: return "quadrature-failure";
  }
  return "unknown";
}

// Every domain failure in the library is reported through this type; kind()
// carries the stable error name used by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace landen
