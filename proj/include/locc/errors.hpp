#pragma once

#include <stdexcept>
#include <string>

namespace locc {

// Every failure raised by the library derives from Error. The three
// intermediate classes map one-to-one onto the CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: shapes, layouts, probabilities, operators that violate a contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The input was fine but a numerical procedure failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

#define LOCC_DEFINE_ERROR(Name, Base) \
  class Name : public Base {          \
   public:                            \
    using Base::Base;                 \
  };

LOCC_DEFINE_ERROR(ShapeError, ValidationError)
LOCC_DEFINE_ERROR(SizeError, ValidationError)
LOCC_DEFINE_ERROR(LayoutError, ValidationError)
LOCC_DEFINE_ERROR(IndexError, ValidationError)
LOCC_DEFINE_ERROR(SymmetryError, ValidationError)
LOCC_DEFINE_ERROR(NormalizationError, ValidationError)
LOCC_DEFINE_ERROR(DistributionError, ValidationError)
LOCC_DEFINE_ERROR(PovmError, ValidationError)
LOCC_DEFINE_ERROR(ArityError, ValidationError)
LOCC_DEFINE_ERROR(PurityError, ValidationError)
LOCC_DEFINE_ERROR(UnitarityError, ValidationError)
LOCC_DEFINE_ERROR(DomainError, ValidationError)
LOCC_DEFINE_ERROR(ProtocolError, ValidationError)
LOCC_DEFINE_ERROR(ParseError, ValidationError)

LOCC_DEFINE_ERROR(ConvergenceError, NumericalError)
LOCC_DEFINE_ERROR(RootFindingError, NumericalError)

#undef LOCC_DEFINE_ERROR

}  // namespace locc
