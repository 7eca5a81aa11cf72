#pragma once

#include <stdexcept>
#include <string>

namespace knotcg {

// Numeric values double as CLI exit codes where the tool assigns one.
enum class ErrorCode : int {
  Schema = 2,
  InvalidSeifert = 3,
  DegenerateForm = 4,
  NotPElementary = 5,
  VerificationFailed = 6,
  SingularMatrix = 10,
  DimensionMismatch = 11,
  EnumerationTooLarge = 12,
  GenusTooLarge = 13,
  InvalidArgument = 14,
  Internal = 15,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knotcg
