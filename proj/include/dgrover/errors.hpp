#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dgrover {

enum class ErrorCode {
  IdentityInSet,
  NotSymmetric,
  EmptySet,
  IndexOutOfRange,
  RepNotDefined,
  DegenerateBlock,
  InternalInconsistency,
  NegativeMultiplicity,
  SpectralMismatch,
  OracleDisagreement,
  SyntaxError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::IdentityInSet: return "IdentityInSet";
  case ErrorCode::NotSymmetric: return "NotSymmetric";
  case ErrorCode::EmptySet: return "EmptySet";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::RepNotDefined: return "RepNotDefined";
  case ErrorCode::DegenerateBlock: return "DegenerateBlock";
  case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
  case ErrorCode::SpectralMismatch: return "SpectralMismatch";
  case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Errors caused by bad user input (as opposed to a broken invariant).
inline bool is_validation_error(ErrorCode code) {
  switch (code) {
  case ErrorCode::IdentityInSet:
  case ErrorCode::NotSymmetric:
  case ErrorCode::EmptySet:
  case ErrorCode::IndexOutOfRange:
  case ErrorCode::RepNotDefined:
  case ErrorCode::SyntaxError:
  case ErrorCode::InvalidArgument:
    return true;
  default:
    return false;
  }
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Raised by the set-expression parser; position is a 0-based byte offset.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string &what)
      : Error(ErrorCode::SyntaxError,
              "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace dgrover
