#pragma once

#include <stdexcept>
#include <string>

namespace hallpath {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// Evaluation or expansion hit a vanishing denominator.
struct PoleError : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
struct ConsistencyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

// Word letters used at a level where they do not exist.
struct LevelError : Error {
  using Error::Error;
};

// A state exceeded the truncation policy.
struct TruncationOverflow : Error {
  using Error::Error;
};

// Input outside the scope an operation supports.
struct UnsupportedScope : Error {
  using Error::Error;
};

}  // namespace hallpath
