#pragma once

#include <stdexcept>

namespace flipforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A builder's output failed its own brute-force certification.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace flipforge
