#pragma once

#include <stdexcept>
#include <string>

namespace zariski {

// Base for every error raised by the library. The CLI maps these onto exit
// codes; callers that only care about "something went wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ZARISKI_DEFINE_ERROR(Name)                \
  class Name : public Error {                     \
   public:                                        \
    using Error::Error;                           \
  }

ZARISKI_DEFINE_ERROR(InvalidPermutation);
ZARISKI_DEFINE_ERROR(NotInjective);
ZARISKI_DEFINE_ERROR(InvalidWord);
ZARISKI_DEFINE_ERROR(IrreducibleSignature);
ZARISKI_DEFINE_ERROR(IndexOutOfRange);
ZARISKI_DEFINE_ERROR(InvalidMatrix);
ZARISKI_DEFINE_ERROR(InvalidAdjuster);
ZARISKI_DEFINE_ERROR(NotNormalized);
ZARISKI_DEFINE_ERROR(OracleExhausted);
ZARISKI_DEFINE_ERROR(InvalidPair);
ZARISKI_DEFINE_ERROR(FixedPoint);
ZARISKI_DEFINE_ERROR(UnknownGroup);
ZARISKI_DEFINE_ERROR(InvalidGroupTable);
ZARISKI_DEFINE_ERROR(TooLarge);
ZARISKI_DEFINE_ERROR(CarrierMismatch);
ZARISKI_DEFINE_ERROR(ParseError);
ZARISKI_DEFINE_ERROR(EmptyInput);
ZARISKI_DEFINE_ERROR(InvalidArgument);

#undef ZARISKI_DEFINE_ERROR

}  // namespace zariski
