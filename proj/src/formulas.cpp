#include "acyclic/formulas.hpp"

#include <algorithm>

#include "acyclic/errors.hpp"

namespace acyclic {

void BipartiteSpec::validate() const {
  switch (modification) {
    case Modification::None:
      return;
    case Modification::PlusEdgeBlock1:
      if (n1 < 2) throw DomainError("plus-edge needs n1 >= 2 (the added edge joins two vertices of block 1)");
      return;
    case Modification::MinusEdge:
      if (n1 < 1 || n2 < 1) throw DomainError("minus-edge needs n1 >= 1 and n2 >= 1 (there must be an edge to delete)");
      return;
  }
}

std::string BipartiteSpec::describe() const {
  std::string s = "K_{" + std::to_string(n1) + "," + std::to_string(n2) + "}";
  switch (modification) {
    case Modification::None: break;
    case Modification::PlusEdgeBlock1: s += "+e1"; break;
    case Modification::MinusEdge: s += "-e"; break;
  }
  return s;
}

Nat count_complete_bipartite(std::size_t n1, std::size_t n2) {
  auto& table = default_stirling_table();
  table.reserve(std::max(n1, n2) + 1);
  Nat sum(0);
  Nat f(1);  // (k-1)!
  for (std::size_t k = 1; k <= std::min(n1, n2) + 1; ++k) {
    if (k > 1) f *= Nat(k - 1);
    sum += f * f * table.get(n1 + 1, k) * table.get(n2 + 1, k);
  }
  return sum;
}

Nat count_plus_edge(std::size_t n1, std::size_t n2) {
  BipartiteSpec{n1, n2, Modification::PlusEdgeBlock1}.validate();
  return count_complete_bipartite(n1, n2) + count_complete_bipartite(n1 - 1, n2);
}

Nat flippable_count_formula(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw DomainError("flippable count needs an edge: n1 >= 1 and n2 >= 1");

  auto& table = default_stirling_table();
  table.reserve(std::max(n1, n2) + 1);

  // k = 1: every edge points from block 1 to block 2 and the fixed edge flips.
  Integer x = 1;
  Integer f = 1;  // (k-2)!
  for (std::size_t k = 2; k <= std::min(n1, n2) + 1; ++k) {
    if (k > 2) f *= static_cast<unsigned long>(k - 2);
    const Integer s1_hi = table.get(n1 + 1, k).value();
    const Integer s1_lo = table.get(n1, k).value();
    const Integer s2_hi = table.get(n2 + 1, k).value();
    const Integer s2_lo = table.get(n2, k).value();
    const auto kk = static_cast<long>(k);
    Integer bracket = (2 * kk - 3) * s1_hi * s2_hi;
    bracket -= (kk - 2) * (s1_hi * s2_lo + s1_lo * s2_hi);
    bracket -= s1_lo * s2_lo;
    x += f * f * bracket;
  }

  if (sgn(x) < 0) throw ContractViolation("flippable count negative for K_{" + std::to_string(n1) + "," + std::to_string(n2) + "}");
  Nat result(std::move(x));
  if (!result.is_even()) {
    throw ContractViolation("flippable count " + result.to_string() + " is odd for K_{" + std::to_string(n1) + "," +
                            std::to_string(n2) + "}");
  }
  return result;
}

Nat count_minus_edge(std::size_t n1, std::size_t n2) {
  BipartiteSpec{n1, n2, Modification::MinusEdge}.validate();
  const Nat x = flippable_count_formula(n1, n2);
  Integer half;
  mpz_divexact_ui(half.get_mpz_t(), x.value().get_mpz_t(), 2);
  return count_complete_bipartite(n1, n2) - Nat(std::move(half));
}

Nat count_acyclic(const BipartiteSpec& spec) {
  spec.validate();
  switch (spec.modification) {
    case Modification::None: return count_complete_bipartite(spec.n1, spec.n2);
    case Modification::PlusEdgeBlock1: return count_plus_edge(spec.n1, spec.n2);
    case Modification::MinusEdge: return count_minus_edge(spec.n1, spec.n2);
  }
  throw ContractViolation("unknown modification");
}

}  // namespace acyclic
