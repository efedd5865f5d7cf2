#pragma once

#include <stdexcept>
#include <string>

namespace gtv {

// Base of every error raised by the library. Callers that only care about
// "something in the verification failed to run" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operands live in different number fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// An enumeration or ball-size budget was exceeded before the check finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An isometry sent a vertex of a finite working ball outside the ball.
class OutOfBall : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; the input data contradicts the
// structure it claims to have.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtv
