#pragma once

#include <stdexcept>
#include <string>

namespace sigenum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed DIMACS input.
struct ParseError : Error {
  using Error::Error;
};

// A SAT engine was asked to solve a formula outside its class.
struct EngineMismatchError : Error {
  using Error::Error;
};

// A configurable resource guard tripped (e.g. a 2^n sweep refused).
struct ResourceLimitError : Error {
  using Error::Error;
};

// A structural invariant the algorithms rely on was violated.
struct InvariantError : Error {
  using Error::Error;
};

// Invalid option combination at the API/CLI boundary.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace sigenum
