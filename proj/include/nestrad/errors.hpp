#pragma once

#include <stdexcept>
#include <string>

namespace nestrad {

// Root of every error the library raises. Subclasses map onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (negative radicand, |x| > 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller misuse: mismatched scales, malformed decimal strings, bad flags.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Requested recursion depth exceeds what the working precision can carry.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// An iteration ran out of its step budget before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Exact angle ratio requested for a seed whose angle is not tabulated.
class CatalogMissError : public Error {
 public:
  using Error::Error;
};

// A classical formula failed to reproduce; the message names the formula.
class CatalogFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace nestrad
