#include "normbasis/error.hpp"

namespace normbasis {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NonMonicModulus: return "NonMonicModulus";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::NotAnOrder: return "NotAnOrder";
    case ErrorCode::InternalNonField: return "InternalNonField";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotGalois: return "NotGalois";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ExhaustedSimplex: return "ExhaustedSimplex";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotNormalBasis: return "NotNormalBasis";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerifyMismatch: return "VerifyMismatch";
  }
  return "Unknown";
}

}  // namespace normbasis
