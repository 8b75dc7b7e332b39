#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgmf {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UndeclaredVariable : public Error {
 public:
  explicit UndeclaredVariable(const std::string& name)
      : Error("undeclared variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class PotentialMismatch : public Error {
 public:
  using Error::Error;
};

class VariableOverlap : public Error {
 public:
  using Error::Error;
};

class NonInjectiveRename : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgmf
