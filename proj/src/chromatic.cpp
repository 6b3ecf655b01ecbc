#include "acyclic/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "acyclic/errors.hpp"

namespace acyclic {

ChromaticPolynomial::ChromaticPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

Integer ChromaticPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string ChromaticPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Integer& c = coefficients_[i];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

namespace {

using Poly = std::vector<Integer>;
using Adjacency = std::vector<std::uint32_t>;  // adjacency bitmask per vertex

void trim(Poly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

// (x - d) * p
Poly times_x_minus(const Poly& p, unsigned long d) {
  Poly r(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + 1] += p[i];
    r[i] -= p[i] * d;
  }
  trim(r);
  return r;
}

Poly subtract(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Drops vertex v and renumbers the ones above it down by one.
Adjacency remove_vertex(const Adjacency& adj, std::size_t v) {
  const std::uint32_t low = (std::uint32_t{1} << v) - 1;
  auto squeeze = [&](std::uint32_t m) { return (m & low) | ((m >> (v + 1)) << v); };
  Adjacency out;
  out.reserve(adj.size() - 1);
  for (std::size_t i = 0; i < adj.size(); ++i)
    if (i != v) out.push_back(squeeze(adj[i]));
  return out;
}

// Relabels vertices by (degree, sorted neighbour degrees, current label).
// Equal outputs are identical labelled graphs, so the memo never conflates
// non-identical inputs.
Adjacency relabel(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<int> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = std::popcount(adj[v]);
  std::vector<std::vector<int>> profile(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w)
      if ((adj[v] >> w) & 1u) profile[v].push_back(degree[w]);
    std::sort(profile[v].begin(), profile[v].end());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return profile[a] < profile[b];
  });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  Adjacency out(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if ((adj[v] >> w) & 1u) out[position[v]] |= std::uint32_t{1} << position[w];
  return out;
}

class DeletionContraction {
 public:
  Poly solve(const Adjacency& input) {
    Adjacency adj = relabel(input);
    if (auto it = memo_.find(adj); it != memo_.end()) return it->second;
    Poly result = compute(adj);
    memo_.emplace(std::move(adj), result);
    return result;
  }

 private:
  Poly compute(const Adjacency& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return Poly{1};

    // A vertex whose neighbourhood is a clique of size d contributes a factor
    // (x - d); this covers isolated vertices, leaves and complete graphs.
    for (std::size_t v = n; v-- > 0;) {
      const std::uint32_t nb = adj[v];
      bool clique = true;
      for (std::size_t w = 0; w < n && clique; ++w)
        if ((nb >> w) & 1u) clique = (nb & ~adj[w] & ~(std::uint32_t{1} << w)) == 0;
      if (clique) return times_x_minus(solve(remove_vertex(adj, v)), static_cast<unsigned long>(std::popcount(nb)));
    }

    // Split on an edge at the highest-degree vertex (label 0 after relabel).
    const std::size_t u = 0;
    const auto v = static_cast<std::size_t>(std::countr_zero(adj[u]));
    Adjacency deleted = adj;
    deleted[u] &= ~(std::uint32_t{1} << v);
    deleted[v] &= ~(std::uint32_t{1} << u);

    // Contract v into u: parallel edges collapse in the bitmask and the
    // contracted edge is gone, so no loop can appear.
    Adjacency merged = deleted;
    merged[u] |= merged[v];
    for (std::size_t w = 0; w < n; ++w) {
      if ((merged[v] >> w) & 1u) merged[w] |= std::uint32_t{1} << u;
    }
    merged[u] &= ~(std::uint32_t{1} << u);
    Adjacency contracted = remove_vertex(merged, v);

    return subtract(solve(deleted), solve(contracted));
  }

  std::map<Adjacency, Poly> memo_;
};

}  // namespace

ChromaticPolynomial chromatic_polynomial(const Graph& g) {
  if (g.vertex_count() > kMaxChromaticVertices) {
    throw LimitExceeded("chromatic polynomial limited to " + std::to_string(kMaxChromaticVertices) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  Adjacency adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return ChromaticPolynomial(DeletionContraction{}.solve(adj));
}

Nat stanley_count(const Graph& g) {
  Integer value = chromatic_polynomial(g).evaluate(-1);
  if (g.vertex_count() % 2 == 1) value = -value;
  if (sgn(value) < 0) throw ContractViolation("(-1)^n P(-1) is negative for " + g.to_string());
  return Nat(std::move(value));
}

}  // namespace acyclic
