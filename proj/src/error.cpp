#include "tropitheta/error.hpp"

namespace tropitheta {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::SingularEmbedding: return "SingularEmbedding";
    case ErrorKind::NonIntegerLambda: return "NonIntegerLambda";
    case ErrorKind::NotPolarization: return "NotPolarization";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::WindowInsufficient: return "WindowInsufficient";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalInvariantViolated: return "InternalInvariantViolated";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
    case ErrorKind::ValuationMismatch: return "ValuationMismatch";
    case ErrorKind::AsymmetricPairing: return "AsymmetricPairing";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::RootUnavailable: return "RootUnavailable";
    case ErrorKind::ResidueCancellation: return "ResidueCancellation";
  }
  return "Error";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema: return 1;
    case ErrorKind::CertificateFailed:
    case ErrorKind::InternalInvariantViolated: return 3;
    default: return 2;
  }
}

}  // namespace tropitheta
