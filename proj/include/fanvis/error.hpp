#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanvis {

enum class ErrorCode {
  // exact-geom
  BoundaryPoint,
  ParseError,
  // polygon-vis / terrain-vis
  TooFewVertices,
  DuplicateVertex,
  NotSimple,
  NotGeneralPosition,
  NotConvexAtKernel,
  NotInKernel,
  NotMonotone,
  // projection
  InvalidProjection,
  VanishingPoint,
  MonotonicityViolation,
  ValidationFailure,
  ParanoidCheckFailed,
  // graph-core
  IndexOutOfRange,
  NotABijection,
  // reduction
  OracleCertificateInvalid,
  CertificateInvalid,
  // generators
  GenerationExhausted,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this one exception type; code()
// is the machine-readable reason the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fanvis
