#pragma once

#include <stdexcept>
#include <string>

namespace frs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FRS_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

FRS_DEFINE_ERROR(InvalidElement);
FRS_DEFINE_ERROR(InvalidHomomorphism);
FRS_DEFINE_ERROR(NotASubgroup);
FRS_DEFINE_ERROR(ArithmeticOverflow);
FRS_DEFINE_ERROR(ModulusMismatch);
FRS_DEFINE_ERROR(UnsupportedModulus);
FRS_DEFINE_ERROR(DivisionByZero);
FRS_DEFINE_ERROR(NotReal);
FRS_DEFINE_ERROR(InvalidBicharacter);
FRS_DEFINE_ERROR(InvalidCocycle);
FRS_DEFINE_ERROR(ZeroElement);
FRS_DEFINE_ERROR(NotInRadical);
FRS_DEFINE_ERROR(InvalidRootSystem);
FRS_DEFINE_ERROR(NotClosed);
FRS_DEFINE_ERROR(OracleMismatch);
FRS_DEFINE_ERROR(NotCompatible);
FRS_DEFINE_ERROR(BadParameters);
FRS_DEFINE_ERROR(InputError);

#undef FRS_DEFINE_ERROR

}  // namespace frs
