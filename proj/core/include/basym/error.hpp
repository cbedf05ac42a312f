#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace basym {

enum class ErrorKind {
  DescriptorMismatch,
  AmbientMismatch,
  UndefinedDegree,
  Inhomogeneous,
  Positivity,
  Overflow,
  Syntax,
  InvalidArgument,
  ResolutionLength,
  NotEquigenerated,
  FitFailure,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error carrying the byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what) : Error(ErrorKind::Syntax, what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace basym
