#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divexp {

enum class ErrorCode {
  InvalidArgument,
  Precondition,
  DivisionByZero,
  NotDivisible,
  NotSquare,
  ZeroPolynomial,
  NotMember,
  CertificationFailure,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries a machine-readable code; the CLI
// turns it into {"error": code, "message": what()}.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace divexp
