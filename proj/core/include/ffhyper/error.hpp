#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffhyper {

enum class ErrorCode {
  NotOddPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  FieldMismatch,
  ArityMismatch,
  ZeroPolynomial,
  EmptyGenerators,
  NotSymmetric,
  ConstantPolynomial,
  DuplicateVertex,
  BudgetExceeded,
  NotMonic,
  NotAdmissible,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError, message + " at line " + std::to_string(line) + ", column " +
                                         std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ffhyper
