#pragma once

#include <stdexcept>
#include <string>

namespace alternabase {

/// Base class of every error raised by the library. The CLI maps it to exit
/// status 1; VerificationFailed maps to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ALTERNABASE_ERROR(Name)                      \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  }

ALTERNABASE_ERROR(MixedFields);
ALTERNABASE_ERROR(DivisionByZero);
ALTERNABASE_ERROR(MalformedInput);
ALTERNABASE_ERROR(BaseNotGreaterThanOne);
ALTERNABASE_ERROR(PeriodNotCompatible);
ALTERNABASE_ERROR(NegativeInput);
ALTERNABASE_ERROR(BudgetExhausted);
ALTERNABASE_ERROR(NotAdmissible);
ALTERNABASE_ERROR(AlphabetMismatch);
ALTERNABASE_ERROR(NotProlongable);
ALTERNABASE_ERROR(EigenIdentityViolated);
ALTERNABASE_ERROR(NotBinaryWord);
ALTERNABASE_ERROR(NotBinaryAlphabet);
ALTERNABASE_ERROR(VerificationFailed);

#undef ALTERNABASE_ERROR

}  // namespace alternabase
