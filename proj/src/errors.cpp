#include "knotcg/errors.hpp"

namespace knotcg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Schema: return "SchemaError";
    case ErrorCode::InvalidSeifert: return "InvalidSeifertMatrix";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotPElementary: return "NotPElementary";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::GenusTooLarge: return "GenusTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace knotcg
