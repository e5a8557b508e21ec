#pragma once

#include <stdexcept>
#include <string>

namespace jackpieri {

/// Base of every error raised by the library. Each subclass names one
/// failure mode so callers can react (resample d, switch to symbolic mode).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define JACKPIERI_DEFINE_ERROR(Name)            \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(#Name ": " + what) {}           \
  }

JACKPIERI_DEFINE_ERROR(ZeroDenominator);
JACKPIERI_DEFINE_ERROR(DivisionByZero);
JACKPIERI_DEFINE_ERROR(ModeMismatch);
JACKPIERI_DEFINE_ERROR(PoleAtD);
JACKPIERI_DEFINE_ERROR(ParseError);
JACKPIERI_DEFINE_ERROR(WeightMismatch);
JACKPIERI_DEFINE_ERROR(RankMismatch);
JACKPIERI_DEFINE_ERROR(InexactDivision);
JACKPIERI_DEFINE_ERROR(NotSymmetric);
JACKPIERI_DEFINE_ERROR(NotAPartition);
JACKPIERI_DEFINE_ERROR(EigenvalueCollision);
JACKPIERI_DEFINE_ERROR(ZeroNormalizer);
JACKPIERI_DEFINE_ERROR(PoleInA);
JACKPIERI_DEFINE_ERROR(SingularSystem);
JACKPIERI_DEFINE_ERROR(InvalidArgument);

#undef JACKPIERI_DEFINE_ERROR

}  // namespace jackpieri
