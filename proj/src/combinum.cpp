#include "acyclic/combinum.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "acyclic/errors.hpp"

namespace acyclic {

Nat::Nat(std::uint64_t value) {
  // mpz_class has no portable uint64 constructor; go through unsigned long.
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  value_ = static_cast<unsigned long>(value);
}

Nat::Nat(Integer value) : value_(std::move(value)) {
  if (sgn(value_) < 0) {
    throw ContractViolation("Nat constructed from negative value " + value_.get_str());
  }
}

Nat Nat::from_string(const std::string& decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal natural: '" + decimal + "'");
  }
  return Nat(Integer(decimal, 10));
}

Nat& Nat::operator+=(const Nat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
  if (value_ < rhs.value_) {
    throw ContractViolation("Nat subtraction underflow: " + value_.get_str() + " - " + rhs.value_.get_str());
  }
  value_ -= rhs.value_;
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.value().get_str(); }

StirlingTable::StirlingTable() { rows_.push_back({Nat(1)}); }

std::size_t StirlingTable::max_n() const {
  std::shared_lock lock(mutex_);
  return rows_.size() - 1;
}

void StirlingTable::reserve(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return;
  }
  std::unique_lock lock(mutex_);
  grow_locked(n);
}

void StirlingTable::grow_locked(std::size_t n) {
  // Row r holds S(r, 0..r).
  while (rows_.size() <= n) {
    const auto r = rows_.size();
    const auto& prev = rows_.back();
    std::vector<Nat> row(r + 1);
    row[0] = Nat(0);
    for (std::size_t k = 1; k <= r; ++k) {
      Nat term = k < r ? Nat(k) * prev[k] : Nat(0);
      term += prev[k - 1];
      row[k] = std::move(term);
    }
    rows_.push_back(std::move(row));
  }
}

Nat StirlingTable::get(std::size_t n, std::size_t k) {
  if (k > n) return Nat(0);
  reserve(n);
  std::shared_lock lock(mutex_);
  return rows_[n][k];
}

StirlingTable& default_stirling_table() {
  static StirlingTable table;
  return table;
}

Nat stirling2(std::size_t n, std::size_t k) { return default_stirling_table().get(n, k); }

Nat factorial(std::size_t n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return Nat(std::move(result));
}

Nat poly_bernoulli_neg(std::size_t n, std::size_t m) {
  auto& table = default_stirling_table();
  table.reserve(std::max(n, m) + 1);
  Nat sum(0);
  Nat j_factorial(1);
  for (std::size_t j = 0; j <= std::min(n, m); ++j) {
    if (j > 0) j_factorial *= Nat(j);
    sum += j_factorial * j_factorial * table.get(n + 1, j + 1) * table.get(m + 1, j + 1);
  }
  return sum;
}

}  // namespace acyclic
