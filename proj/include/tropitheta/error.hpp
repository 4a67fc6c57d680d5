#pragma once

#include <stdexcept>
#include <string>

namespace tropitheta {

enum class ErrorKind {
  Schema,
  DivisionByZero,
  NotSymmetric,
  SingularEmbedding,
  NonIntegerLambda,
  NotPolarization,
  NotPositiveDefinite,
  WindowInsufficient,
  DimensionUnsupported,
  PreconditionViolated,
  InternalInvariantViolated,
  CertificateFailed,
  ValuationMismatch,
  AsymmetricPairing,
  NotQuadratic,
  RootUnavailable,
  ResidueCancellation,
};

const char* kind_name(ErrorKind kind);

// Precondition violations map to CLI exit code 2, certificate failures to 3,
// schema errors to 1.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace tropitheta
