#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normbasis {

enum class ErrorCode {
  NonSquare,
  Singular,
  NonMonicModulus,
  NotInvertible,
  NotSquarefree,
  ReduciblePolynomial,
  NotAnOrder,
  InternalNonField,
  BadParameter,
  PrecisionExhausted,
  NotGalois,
  NotClosed,
  ZeroIdeal,
  PreconditionViolated,
  ExhaustedSimplex,
  NotIntegral,
  NotNormalBasis,
  ParseError,
  VerifyMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace normbasis
