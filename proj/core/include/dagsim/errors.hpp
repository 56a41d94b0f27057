#pragma once

#include <stdexcept>
#include <string>

namespace dagsim {

enum class ErrorCode {
  NonPositiveRate,
  NonPositiveDelay,
  RegimeConditionViolated,
  InvalidThreshold,
  AdaptationUndefined,
  EmptyTipSet,
  SpecParseError,
  SchemaMismatch,
};

/// Thrown when domain parameters fail validation. Carries a machine-readable
/// code so callers (the CLI in particular) can map failures to exit codes.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed experiment description (bad JSON, unknown kind, missing field).
class SpecParseError : public std::runtime_error {
 public:
  explicit SpecParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Two result tables cannot be compared (different kinds or key sets).
class SchemaMismatch : public std::runtime_error {
 public:
  explicit SchemaMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dagsim
