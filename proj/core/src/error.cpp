#include "anamorph/error.hpp"

namespace anamorph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return "io";
    case ErrorKind::kEmptyInput: return "empty-input";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kEncoding: return "encoding";
    case ErrorKind::kUnknownSymbol: return "unknown-symbol";
    case ErrorKind::kInventoryConflict: return "inventory-conflict";
    case ErrorKind::kGuardExceeded: return "guard-exceeded";
    case ErrorKind::kArity: return "arity";
    case ErrorKind::kEmptyJoin: return "empty-join";
    case ErrorKind::kUndefinedCorrelation: return "undefined-correlation";
  }
  return "unknown";
}

namespace {

std::string with_line(const std::string& message, std::size_t line) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(with_line(message, line)), kind_(kind), line_(line) {}

}  // namespace anamorph
