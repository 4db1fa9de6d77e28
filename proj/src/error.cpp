#include "divexp/error.hpp"

namespace divexp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::NotDivisible: return "not_divisible";
    case ErrorCode::NotSquare: return "not_square";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::NotMember: return "not_member";
    case ErrorCode::CertificationFailure: return "certification_failure";
  }
  return "unknown";
}

}  // namespace divexp
