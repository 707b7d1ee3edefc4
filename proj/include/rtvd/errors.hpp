#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rtvd {

using Vertex = int;

/// Raised when an input violates the class or shape an operation requires
/// (e.g. a tournament solver handed a non-tournament).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by exact exponential routines when the input exceeds their
/// configured size cap. They fail loudly instead of running unbounded.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised by topological_ordering on a cyclic digraph; carries a directed
/// cycle v0 -> v1 -> ... -> v0 (the closing arc is implicit).
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(std::vector<Vertex> cycle)
      : std::runtime_error("digraph contains a directed cycle"), cycle_(std::move(cycle)) {}

  const std::vector<Vertex>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

}  // namespace rtvd
