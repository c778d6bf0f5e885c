#pragma once

#include <stdexcept>
#include <string>

namespace trifold {

/// Base of every error raised by the kernel and the verification layers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undeclared jet, or values from two different frames combined.
class FrameError : public Error {
 public:
  using Error::Error;
};

/// A derivation would exceed the frame's jet-order budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

class SubstitutionError : public Error {
 public:
  using Error::Error;
};

/// Degenerate input: f'' == 0, singular matrix, vanishing Wronskian.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A matrix outside the image of the type A parameter map.
class NotInImageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace trifold
