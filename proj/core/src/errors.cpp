#include "kprimes/errors.hpp"

namespace kprimes {

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

IncompletenessError::IncompletenessError(double lo, double hi, const std::string& what)
    : Error(ErrorKind::incomplete, what), lo_(lo), hi_(hi) {}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::dependency: return "dependency";
    case ErrorKind::precision: return "precision";
    case ErrorKind::range: return "range";
    case ErrorKind::incomplete: return "incomplete";
  }
  return "unknown";
}

}  // namespace kprimes
