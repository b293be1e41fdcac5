#pragma once

#include <stdexcept>
#include <string>

namespace howechar {

// Base of every domain error.  name() is the stable identifier printed by the
// CLI on stderr; what() carries the detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define HOWECHAR_ERROR(Name)                                     \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

HOWECHAR_ERROR(InvalidArgument);
HOWECHAR_ERROR(DimensionMismatch);
HOWECHAR_ERROR(CapExceeded);
HOWECHAR_ERROR(SingularPoint);
HOWECHAR_ERROR(NotDominant);
HOWECHAR_ERROR(QuadratureUnreliable);
HOWECHAR_ERROR(ChamberMismatch);
HOWECHAR_ERROR(NonConvergentDirection);
HOWECHAR_ERROR(NonRationalExponent);
HOWECHAR_ERROR(PoleAtPoint);
HOWECHAR_ERROR(NotInCorrespondence);
HOWECHAR_ERROR(OutsideSupport);
HOWECHAR_ERROR(EmptyCosetSet);
HOWECHAR_ERROR(NotMinimalKType);
HOWECHAR_ERROR(TruncationTooSmall);
HOWECHAR_ERROR(FormulaInconsistency);
HOWECHAR_ERROR(MonteCarloOnly);
HOWECHAR_ERROR(InternalConsistency);

#undef HOWECHAR_ERROR

}  // namespace howechar
