#pragma once

#include <stdexcept>
#include <string>

namespace stepskew {

enum class ErrorKind {
  InvalidArgument,
  NotPeriodic,
  NoUnitDerivativeCrossing,
  NoSolution,
  DegenerateRoot,
  MBoundExceeded,
  IterationCap,
  NotFound,
  BudgetExhausted,
  CommutationViolated,
  PrecisionLoss,
  OrientationError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::NoUnitDerivativeCrossing: return "NoUnitDerivativeCrossing";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DegenerateRoot: return "DegenerateRoot";
    case ErrorKind::MBoundExceeded: return "MBoundExceeded";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::CommutationViolated: return "CommutationViolated";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    case ErrorKind::OrientationError: return "OrientationError";
  }
  return "Unknown";
}

}  // namespace stepskew
