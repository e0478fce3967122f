#pragma once

#include <stdexcept>
#include <string>

namespace weylfan {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  parse,
  region,   // weight outside the polynomial region (or Groebner region)
  budget,   // configured step / degree / enumeration budget exceeded
  verification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::parse, what + " (line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace weylfan
