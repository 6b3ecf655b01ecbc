#pragma once

#include <stdexcept>

namespace acyclic {

// Arguments outside the domain where a count is defined (e.g. K+e with n1 < 2).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Brute-force or deletion-contraction job larger than the compiled-in caps.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An internal invariant failed: negative natural, odd X, wrong graph shape.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace acyclic
