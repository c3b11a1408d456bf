#pragma once

#include <stdexcept>
#include <string>

namespace fends {

// Base class for every error raised by the library. The CLI maps each
// subclass onto its own exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidWord : public Error {
public:
  using Error::Error;
};

class InvalidModel : public Error {
public:
  using Error::Error;
};

// Subgroup shapes the oracles cannot decide (e.g. a non product-form
// subgroup of a direct product).
class UnsupportedSubgroup : public Error {
public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// A cover/base ball pair that does not fit together.
class InconsistentBalls : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

// K is not contained in H.
class ChainViolation : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

} // namespace fends
