#pragma once

#include <stdexcept>
#include <string>

namespace ncsq {

// Base of every error raised by the library. `kind()` is the stable name
// reported by the command-line frontend.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define NCSQ_DEFINE_ERROR(Name, Base)                                  \
  class Name : public Base {                                          \
   public:                                                            \
    using Base::Base;                                                 \
    const char* kind() const noexcept override { return #Name; }      \
  }

// Parameters outside the admissible domain.
NCSQ_DEFINE_ERROR(DomainError, Error);
// theta*eta >= hbar^2: the coordinate map has no inverse.
NCSQ_DEFINE_ERROR(SingularMap, DomainError);
NCSQ_DEFINE_ERROR(NonPositiveStiffness, DomainError);
// Omega would be imaginary; the oscillating solutions do not apply.
NCSQ_DEFINE_ERROR(OverdampedRegime, DomainError);
NCSQ_DEFINE_ERROR(StepTooLarge, DomainError);
NCSQ_DEFINE_ERROR(InsufficientSamples, DomainError);
NCSQ_DEFINE_ERROR(SingularCovariance, DomainError);
NCSQ_DEFINE_ERROR(DegenerateAxes, DomainError);

// Output could not be written.
NCSQ_DEFINE_ERROR(IoError, Error);

#undef NCSQ_DEFINE_ERROR

}  // namespace ncsq
