#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtsf {

enum class ErrorKind {
  Domain,
  Pole,
  ConvergenceViolation,
  NonConvergence,
  NumeratorPole,
  EvaluationUnstable,
  MaxSubdivisions,
  TruncationUnstable,
  ExtrapolationDiverged,
  InvalidCase,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::ConvergenceViolation: return "convergence_violation";
    case ErrorKind::NonConvergence: return "non_convergence";
    case ErrorKind::NumeratorPole: return "numerator_pole";
    case ErrorKind::EvaluationUnstable: return "evaluation_unstable";
    case ErrorKind::MaxSubdivisions: return "max_subdivisions";
    case ErrorKind::TruncationUnstable: return "truncation_unstable";
    case ErrorKind::ExtrapolationDiverged: return "extrapolation_diverged";
    case ErrorKind::InvalidCase: return "invalid_case";
  }
  return "unknown";
}

// Every failure raised by the library carries a kind so callers (and the CLI)
// can map it to a stable machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gtsf
