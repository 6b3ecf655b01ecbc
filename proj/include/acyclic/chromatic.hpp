#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acyclic/combinum.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// Integer polynomial in one variable; coefficient i multiplies x^i.
class ChromaticPolynomial {
 public:
  ChromaticPolynomial() = default;
  explicit ChromaticPolynomial(std::vector<Integer> coefficients);

  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  const Integer& coefficient(std::size_t i) const { return coefficients_.at(i); }

  Integer evaluate(const Integer& x) const;

  /// e.g. "x^3 - 3x^2 + 2x".
  std::string to_string() const;

  friend bool operator==(const ChromaticPolynomial&, const ChromaticPolynomial&) = default;

 private:
  std::vector<Integer> coefficients_;
};

inline constexpr std::size_t kMaxChromaticVertices = 16;

/// Chromatic polynomial by deletion-contraction, P(G) = P(G-e) - P(G/e),
/// memoized within one call. Throws LimitExceeded above kMaxChromaticVertices.
ChromaticPolynomial chromatic_polynomial(const Graph& g);

/// Acyclic orientation count as (-1)^n P_G(-1).
Nat stanley_count(const Graph& g);

}  // namespace acyclic
