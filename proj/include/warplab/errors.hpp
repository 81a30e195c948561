#pragma once

#include <stdexcept>
#include <string>

namespace warplab {

// Rejected input: a precondition or config invariant is violated.
// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A resolution/tolerance rule cannot be met with the given parameters
// (aliasing contract, phase-resolution rule, inversion tolerance).
// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}
