#ifndef DEGEN_ERROR_HPP
#define DEGEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace degen {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  NonSplit,
  InfeasibleE,
  FieldTooSmall,
  TypeMismatch,
  InadmissiblePrime,
  InsufficientPrimes,
  GuardrailExceeded,
  NotPolynomial,
  CounterexampleFound,
  CheckFailed,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace degen

#endif
