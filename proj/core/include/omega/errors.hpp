#pragma once

#include <stdexcept>
#include <string>

namespace omega {

// Input violates a precondition (zero where a natural is required, non-prime
// modulus, malformed literal, ...). The CLI maps this to exit code 1.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but exceeds a configured cap or 64/128-bit range.
// The CLI maps this to exit code 2.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Query against an index that holds no values.
class EmptyIndex : public std::logic_error {
 public:
  EmptyIndex() : std::logic_error("index is empty") {}
};

}  // namespace omega
