#pragma once

#include <stdexcept>
#include <string>

namespace slownim {

/// Bad caller input: malformed positions, dimension mismatches, illegal moves.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (memo entries, output size, playout length) was hit.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug or a counterexample to a
/// proven statement, never a recoverable condition.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace slownim
