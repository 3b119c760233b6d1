#pragma once

#include <stdexcept>
#include <string>

namespace kprimes {

enum class ErrorKind {
  validation,  // malformed input, violated precondition
  dependency,  // missing zero data or other prerequisite
  precision,   // numerical result failed its self-consistency check
  range,       // argument outside a configured envelope
  incomplete,  // zero search could not reach the expected count
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::range, what) {}
};

class DependencyError : public Error {
 public:
  explicit DependencyError(const std::string& what)
      : Error(ErrorKind::dependency, what) {}
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what)
      : Error(ErrorKind::precision, what) {}
};

class IncompletenessError : public Error {
 public:
  IncompletenessError(double lo, double hi, const std::string& what);
  double interval_lo() const noexcept { return lo_; }
  double interval_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace kprimes
