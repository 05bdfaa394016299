#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosetlab {

enum class ErrorCode {
  Parse,
  UndeclaredGenerator,
  UnknownGroup,
  Overflow,
  BudgetExceeded,
  NotTransitive,
  InvalidArgument,
  Io,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Syntax errors carry a 1-based source position.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, const std::string &msg, std::size_t line,
             std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace cosetlab
