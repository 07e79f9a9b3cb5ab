#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbx {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contract violation by the caller, e.g. mixing polynomial rings of different arity.
class UsageError : public Error {
 public:
  using Error::Error;
};

// An operation that is undefined on the zero polynomial (LT, make_monic, S-polynomial).
class ZeroPolynomialError : public Error {
 public:
  explicit ZeroPolynomialError(const std::string& op)
      : Error(op + ": zero polynomial has no leading term") {}
};

class EmptyDivisorSetError : public Error {
 public:
  EmptyDivisorSetError() : Error("rem: empty divisor set") {}
};

// Malformed polynomial text. `offset` is the byte offset within the line,
// `line` is 1-based and 0 when the text was not read from a file.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset, std::size_t line = 0)
      : Error(format(message, offset, line)),
        message_(std::move(message)),
        offset_(offset),
        line_(line) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t offset, std::size_t line) {
    std::string where = line ? "line " + std::to_string(line) + ", " : std::string{};
    return where + "offset " + std::to_string(offset) + ": " + message;
  }

  std::string message_;
  std::size_t offset_;
  std::size_t line_;
};

class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("input contains no generators") {}
};

class ZeroGeneratorError : public Error {
 public:
  explicit ZeroGeneratorError(std::size_t line)
      : Error("line " + std::to_string(line) + ": generator is the zero polynomial"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Linear form with A = B = C = 0 where a plane was required.
class DegenerateFormError : public Error {
 public:
  DegenerateFormError() : Error("linear form has zero normal vector (A, B, C)") {}
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace gbx
