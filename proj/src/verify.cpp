#include "acyclic/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "acyclic/chromatic.hpp"
#include "acyclic/combinum.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/formulas.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/lonesum.hpp"

namespace acyclic {

namespace {

// Runs `body` and records the first failure message it returns.
CheckResult check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), true, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string pair_label(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string triple_agreement(const BipartiteSpec& spec) {
  const Graph g = graph_for(spec);
  const Nat formula = count_acyclic(spec);
  const Nat brute = count_acyclic_bruteforce(g);
  const Nat stanley = stanley_count(g);
  if (formula == brute && brute == stanley) return {};
  return spec.describe() + ": formula " + formula.to_string() + ", brute force " + brute.to_string() + ", stanley " +
         stanley.to_string();
}

}  // namespace

std::vector<CheckResult> run_verification(std::size_t max_n) {
  if (max_n > kMaxVerifyN) {
    throw LimitExceeded("verify-all: --max-n " + std::to_string(max_n) + " exceeds cap " + std::to_string(kMaxVerifyN));
  }
  std::vector<CheckResult> results;

  results.push_back(check("stirling recurrence", [&] {
    const std::size_t top = 2 * max_n + 8;
    for (std::size_t n = 1; n <= top; ++n)
      for (std::size_t k = 1; k <= n; ++k)
        if (stirling2(n, k) != Nat(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1))
          return "S" + pair_label(n, k) + " breaks the recurrence";
    return std::string();
  }));

  const std::pair<Modification, const char*> families[] = {
      {Modification::None, "K_{n1,n2}"}, {Modification::PlusEdgeBlock1, "K_{n1,n2}+e1"}, {Modification::MinusEdge, "K_{n1,n2}-e"}};
  for (const auto& [mod, family] : families) {
    results.push_back(check(std::string("formula = brute force = stanley for ") + family, [&, mod = mod] {
      for (std::size_t a = 1; a <= max_n; ++a)
        for (std::size_t b = 1; b <= max_n; ++b) {
          if (mod == Modification::PlusEdgeBlock1 && a < 2) continue;
          if (auto msg = triple_agreement({a, b, mod}); !msg.empty()) return msg;
        }
      return std::string();
    }));
  }

  results.push_back(check("a(K_{n1,n2}) = poly-Bernoulli B_n1^(-n2)", [&] {
    for (std::size_t a = 0; a <= max_n; ++a)
      for (std::size_t b = 0; b <= max_n; ++b)
        if (count_complete_bipartite(a, b) != poly_bernoulli_neg(a, b)) return pair_label(a, b);
    return std::string();
  }));

  results.push_back(check("symmetry of poly-Bernoulli, minus-edge and flippable counts", [&] {
    for (std::size_t a = 1; a <= max_n; ++a)
      for (std::size_t b = 1; b <= max_n; ++b) {
        if (poly_bernoulli_neg(a, b) != poly_bernoulli_neg(b, a)) return "B " + pair_label(a, b);
        if (count_minus_edge(a, b) != count_minus_edge(b, a)) return "minus-edge " + pair_label(a, b);
        if (flippable_count_formula(a, b) != flippable_count_formula(b, a)) return "X " + pair_label(a, b);
      }
    return std::string();
  }));

  results.push_back(check("X even and 2 a(K-e) + X = 2 a(K)", [&] {
    for (std::size_t a = 1; a <= max_n; ++a)
      for (std::size_t b = 1; b <= max_n; ++b) {
        const Nat x = flippable_count_formula(a, b);
        if (!x.is_even()) return "odd X at " + pair_label(a, b);
        if (Nat(2) * count_minus_edge(a, b) + x != Nat(2) * count_complete_bipartite(a, b)) return pair_label(a, b);
      }
    return std::string();
  }));

  results.push_back(check("flippable formula = brute force on every edge", [&] {
    for (std::size_t a = 1; a <= max_n; ++a)
      for (std::size_t b = 1; b <= max_n; ++b) {
        const Nat x = flippable_count_formula(a, b);
        const Graph g = complete_bipartite(a, b);
        const std::size_t edges_to_check = std::max(a, b) <= 3 ? g.edge_count() : 1;
        for (std::size_t e = 0; e < edges_to_check; ++e)
          if (flippable_count_bruteforce(g, e) != x) return pair_label(a, b) + " edge " + std::to_string(e);
      }
    return std::string();
  }));

  results.push_back(check("lonesum count = poly-Bernoulli", [&] {
    for (std::size_t a = 1; a <= max_n; ++a)
      for (std::size_t b = 1; b <= max_n; ++b)
        if (count_lonesum_bruteforce(a, b) != poly_bernoulli_neg(a, b)) return pair_label(a, b);
    return std::string();
  }));

  results.push_back(check("orientation/matrix bijection, acyclic iff lonesum iff no 4-cycle", [&] {
    const std::size_t top = std::min<std::size_t>(max_n, 3);
    for (std::size_t a = 1; a <= top; ++a)
      for (std::size_t b = 1; b <= top; ++b) {
        auto g = std::make_shared<const Graph>(complete_bipartite(a, b));
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (a * b)); ++bits) {
          const Orientation o(g, bits);
          const BinaryMatrix m = orientation_to_matrix(o, a, b);
          if (matrix_to_orientation(m).bits() != bits) return "round trip " + pair_label(a, b);
          const bool acyclic = is_acyclic(o);
          if (acyclic != is_lonesum(m)) return "acyclic vs lonesum " + pair_label(a, b);
          if (acyclic == has_directed_4cycle(o, a, b)) return "4-cycle lemma " + pair_label(a, b);
        }
      }
    return std::string();
  }));

  return results;
}

}  // namespace acyclic
