#pragma once

#include <stdexcept>
#include <string>

namespace mkcover {

// Bad input or violated precondition. CLI maps this to exit code 1.
class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Estimated cost of a brute-force computation exceeds the configured limit.
class WorkLimitError : public GraphError {
  public:
    using GraphError::GraphError;
};

// A mathematical invariant failed. This is either a bug or a counterexample;
// it must never be swallowed. CLI maps this to exit code 2.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace mkcover
