#include "fanvis/error.hpp"

namespace fanvis {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::NotConvexAtKernel: return "NotConvexAtKernel";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::InvalidProjection: return "InvalidProjection";
    case ErrorCode::VanishingPoint: return "VanishingPoint";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::ParanoidCheckFailed: return "ParanoidCheckFailed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::OracleCertificateInvalid: return "OracleCertificateInvalid";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fanvis
