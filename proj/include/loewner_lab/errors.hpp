#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

enum class ErrorKind {
  NonConvergence,
  DomainViolation,
  NotPositiveDefinite,
  DimensionMismatch,
  InvalidDimension,
  NotUnitVector,
  NonPositiveInput,
  OutOfRange,
  InvalidBounds,
  InvalidRange,
  NotInvertible,
  InvalidExponent,
  HypothesisUnsatisfied,
  NotCommuting,
  ConfigError,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the campaign runner in particular) can classify it.
class LabError : public std::runtime_error {
 public:
  LabError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace loewner
