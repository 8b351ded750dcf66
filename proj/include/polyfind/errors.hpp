#pragma once

#include <stdexcept>
#include <string>

namespace polyfind {

// Raised when an on-disk artifact (model file, solver output) cannot be read.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a structure or description violates its invariants
// (dimension mismatch, out-of-range index, duplicate entry).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation is called outside its documented preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace polyfind
