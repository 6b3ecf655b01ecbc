#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <shared_mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace acyclic {

/// Signed arbitrary-precision integer used for intermediate sums.
using Integer = mpz_class;

/// Arbitrary-precision non-negative integer.
///
/// Every count in the library is a Nat. Subtraction that would go below zero
/// throws ContractViolation instead of wrapping.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Throws ContractViolation if `value` is negative.
  explicit Nat(Integer value);

  /// Parses a plain decimal string; throws std::invalid_argument on bad input.
  static Nat from_string(const std::string& decimal);

  const Integer& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }

  Nat& operator+=(const Nat& rhs);
  Nat& operator-=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator-(Nat lhs, const Nat& rhs) { return lhs -= rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }

  friend bool operator==(const Nat& lhs, const Nat& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& lhs, const Nat& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  Integer value_{0};
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

/// Memoized triangle of Stirling numbers of the second kind.
///
/// Grows lazily and never evicts. Readers share a lock; growth takes it
/// exclusively, so one table may be used from many threads.
class StirlingTable {
 public:
  StirlingTable();

  /// S(n, k); zero for k > n. Extends the table to row n when needed.
  Nat get(std::size_t n, std::size_t k);

  /// Number of rows currently stored minus one.
  std::size_t max_n() const;

  /// Ensures rows 0..n exist.
  void reserve(std::size_t n);

 private:
  void grow_locked(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<Nat>> rows_;
};

/// Process-wide table shared by the free functions below.
StirlingTable& default_stirling_table();

Nat stirling2(std::size_t n, std::size_t k);

Nat factorial(std::size_t n);

/// Negative-order poly-Bernoulli number B_n^(-m), via
/// sum_{j=0}^{min(n,m)} (j!)^2 S(n+1, j+1) S(m+1, j+1).
Nat poly_bernoulli_neg(std::size_t n, std::size_t m);

}  // namespace acyclic
