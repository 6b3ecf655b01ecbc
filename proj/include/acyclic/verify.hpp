#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace acyclic {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failing case, empty on success
};

/// Largest block size accepted by run_verification (brute force stays below 2^20).
inline constexpr std::size_t kMaxVerifyN = 4;

/// Cross-checks closed forms against brute force, Stanley's identity,
/// poly-Bernoulli numbers and lonesum counts for block sizes up to max_n.
/// Throws LimitExceeded if max_n > kMaxVerifyN.
std::vector<CheckResult> run_verification(std::size_t max_n);

}  // namespace acyclic
