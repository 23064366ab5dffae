#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polynorm {

enum class ErrorCode {
  EmptyPolytope,
  DimensionMismatch,
  InvalidParameter,
  SliceMismatch,
  NotSymmetric,
  IdentityCheckFailed,
  SearchCapExceeded,
  ZeroPolynomial,
  SyntaxError,
  UnknownVariable,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Base of every error raised by the library. The code is stable and is what
/// the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure in the Laurent polynomial grammar; `position` is a 0-based
/// byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void throw_dimension_mismatch(std::size_t expected,
                                                  std::size_t actual) {
  throw Error(ErrorCode::DimensionMismatch,
              "dimension mismatch: expected " + std::to_string(expected) +
                  ", got " + std::to_string(actual));
}

inline void require_same_dim(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw_dimension_mismatch(expected, actual);
}

}  // namespace polynorm
