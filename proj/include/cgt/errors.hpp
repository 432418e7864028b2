#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

// Malformed input: bad permutations, singular matrices, non-prime moduli.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured size bound.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; results computed so far cannot be trusted.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cgt
