#pragma once

#include <stdexcept>
#include <string>

namespace splitpile {

// Base for every error raised by the library. Callers that only care about
// "something in splitpile rejected the input" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

// Part lengths of a configuration (or word letter counts) do not match the graph.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotStable : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace splitpile
