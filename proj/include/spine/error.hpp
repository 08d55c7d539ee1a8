#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spine {

enum class ErrorKind {
  dimension_mismatch,
  model_mismatch,
  unknown_element,
  invalid_argument,
  unsupported_scope,
  size_limit,
  syntax,
  semantic,
};

// Base of everything the library throws. Callers that only need a category
// (the CLI maps these to exit codes) switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), _kind(kind) {}

  ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string const& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::syntax,
              "syntax error at " + std::to_string(line) + ":" +
                  std::to_string(column) + ": " + message),
        _line(line),
        _column(column) {}

  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

 private:
  std::size_t _line;
  std::size_t _column;
};

}  // namespace spine
