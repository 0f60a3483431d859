#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fink {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary operation on vectors living at different ambient levels.
class AmbientMismatch : public Error {
 public:
  AmbientMismatch(int lhs, int rhs)
      : Error("ambient level mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Vector is not an element of the requested combinatorial subspace.
class NotInSubspace : public Error {
 public:
  using Error::Error;
};

/// A relation oracle was queried outside of its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A real vector has an entry that is not on the net grid.
class GridError : public Error {
 public:
  GridError(std::size_t index, double value)
      : Error("entry " + std::to_string(index) + " = " + std::to_string(value) + " is off the net grid"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Not enough generators for a construction.
class LengthError : public Error {
 public:
  LengthError(std::size_t required, std::size_t available)
      : Error("need " + std::to_string(required) + " generators, have " + std::to_string(available)),
        required_(required) {}
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// Exhaustive search finished without a result.
class NotFound : public Error {
 public:
  NotFound(std::string what, std::size_t candidates_tried)
      : Error(std::move(what)), candidates_tried_(candidates_tried) {}
  std::size_t candidates_tried() const noexcept { return candidates_tried_; }

 private:
  std::size_t candidates_tried_;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fink
