#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anamorph {

enum class ErrorKind {
  kIo,
  kEmptyInput,
  kSchema,
  kEncoding,
  kUnknownSymbol,
  kInventoryConflict,
  kGuardExceeded,
  kArity,
  kEmptyJoin,
  kUndefinedCorrelation,
};

const char* to_string(ErrorKind kind);

/// Data error raised by every module. `line()` is 1-based and 0 when the
/// error is not tied to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace anamorph
