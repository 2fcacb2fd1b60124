#pragma once

#include <stdexcept>
#include <string>

namespace meshlab {

// Bad arguments from a caller: mismatched series orders, malformed pattern text.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain: non-permutations, empty permutations.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration refused because the length exceeds the configured guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meshlab
