#include "polynorm/error.hpp"

namespace polynorm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::SliceMismatch: return "SliceMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IdentityCheckFailed: return "IdentityCheckFailed";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace polynorm
