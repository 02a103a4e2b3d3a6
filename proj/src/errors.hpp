#pragma once

#include <stdexcept>
#include <string>

namespace coshspec {

// Error categories shared with the C API (see include/coshspec.h).
enum class errc : int {
  ok = 0,
  invalid_argument = 1,
  parse = 2,
  validation = 3,
  singular_omega = 4,
  cut_point = 5,
  zero_displacement = 6,
  domain = 7,
  tail_too_fat = 8,
  quadrature_diverged = 9,
  no_convergence = 10,
  bound_violation = 11,
  winding_mismatch = 12,
  not_a_root = 13,
  not_nonnegative = 14,
  certification_failed = 15,
  internal = 16,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

#define COSHSPEC_DEFINE_ERROR(Name, Code)                                 \
  class Name : public Error {                                             \
  public:                                                                  \
    explicit Name(const std::string& msg) : Error(errc::Code, msg) {}      \
  }

COSHSPEC_DEFINE_ERROR(InvalidArgument, invalid_argument);
COSHSPEC_DEFINE_ERROR(ParseError, parse);
COSHSPEC_DEFINE_ERROR(ValidationError, validation);
COSHSPEC_DEFINE_ERROR(SingularOmega, singular_omega);
COSHSPEC_DEFINE_ERROR(CutPointError, cut_point);
COSHSPEC_DEFINE_ERROR(ZeroDisplacement, zero_displacement);
COSHSPEC_DEFINE_ERROR(DomainError, domain);
COSHSPEC_DEFINE_ERROR(TailTooFat, tail_too_fat);
COSHSPEC_DEFINE_ERROR(QuadratureDiverged, quadrature_diverged);
COSHSPEC_DEFINE_ERROR(NoConvergence, no_convergence);
COSHSPEC_DEFINE_ERROR(BoundViolation, bound_violation);
COSHSPEC_DEFINE_ERROR(WindingMismatch, winding_mismatch);
COSHSPEC_DEFINE_ERROR(NotARoot, not_a_root);
COSHSPEC_DEFINE_ERROR(NotNonnegative, not_nonnegative);
COSHSPEC_DEFINE_ERROR(CertificationFailed, certification_failed);
COSHSPEC_DEFINE_ERROR(InternalError, internal);

#undef COSHSPEC_DEFINE_ERROR

}  // namespace coshspec
