#pragma once

#include <cstddef>
#include <string>

#include "acyclic/combinum.hpp"

namespace acyclic {

enum class Modification { None, PlusEdgeBlock1, MinusEdge };

/// One of the graphs covered by the closed forms: K_{n1,n2}, K_{n1,n2} plus an
/// edge inside the block of size n1, or K_{n1,n2} minus one edge.
struct BipartiteSpec {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  Modification modification = Modification::None;

  /// Throws DomainError when the modification is impossible for (n1, n2).
  void validate() const;

  std::string describe() const;

  friend bool operator==(const BipartiteSpec&, const BipartiteSpec&) = default;
};

/// a(K_{n1,n2}) = sum_{k=1}^{min(n1,n2)+1} ((k-1)!)^2 S(n1+1,k) S(n2+1,k).
/// Edgeless cases (n1 == 0 or n2 == 0) give 1.
Nat count_complete_bipartite(std::size_t n1, std::size_t n2);

/// a(K_{n1,n2} + e1) = a(K_{n1,n2}) + a(K_{n1-1,n2}); e1 joins two vertices of
/// the n1-block. Requires n1 >= 2.
Nat count_plus_edge(std::size_t n1, std::size_t n2);

/// Number X of acyclic orientations of K_{n1,n2} that stay acyclic when one
/// fixed edge is reversed. Requires n1, n2 >= 1.
///
/// The bracketed summand can be negative, so the sum is accumulated in a
/// signed integer; a negative or odd total throws ContractViolation.
Nat flippable_count_formula(std::size_t n1, std::size_t n2);

/// a(K_{n1,n2} - e) = a(K_{n1,n2}) - X/2. Requires n1, n2 >= 1.
Nat count_minus_edge(std::size_t n1, std::size_t n2);

/// Dispatches on spec.modification after validating it.
Nat count_acyclic(const BipartiteSpec& spec);

}  // namespace acyclic
