#include "acyclic/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "acyclic/errors.hpp"
#include "acyclic/parallel.hpp"

namespace acyclic {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= vertex_count_) throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("parallel edge in simple graph");
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a simple cycle needs at least 3 vertices");
  auto edges = path(n).edges_;
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges));
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  auto edges = edges_;
  edges.push_back({a, b});
  return Graph(vertex_count_, std::move(edges));
}

Graph Graph::without_edge(std::size_t index) const {
  if (index >= edges_.size()) throw std::out_of_range("edge index " + std::to_string(index) + " out of range");
  auto edges = edges_;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
  return Graph(vertex_count_, std::move(edges));
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << vertex_count_ << " vertices:";
  for (const auto& e : edges_) os << ' ' << e.u << '-' << e.v;
  return os.str();
}

Graph complete_bipartite(std::size_t n1, std::size_t n2) {
  std::vector<Edge> edges;
  edges.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(n1 + j)});
  return Graph(n1 + n2, std::move(edges));
}

Graph with_edge_added_in_block1(const Graph& g, std::size_t n1) {
  if (n1 < 2) throw DomainError("block 1 needs two vertices to add an edge inside it");
  if (g.vertex_count() < n1) throw std::invalid_argument("graph smaller than block 1");
  return g.with_edge(0, 1);
}

Graph with_edge_removed(const Graph& g) {
  if (g.edge_count() == 0) throw DomainError("cannot remove an edge from an edgeless graph");
  return g.without_edge(0);
}

Graph graph_for(const BipartiteSpec& spec) {
  spec.validate();
  auto g = complete_bipartite(spec.n1, spec.n2);
  switch (spec.modification) {
    case Modification::None: return g;
    case Modification::PlusEdgeBlock1: return with_edge_added_in_block1(g, spec.n1);
    case Modification::MinusEdge: return with_edge_removed(g);
  }
  return g;
}

Orientation::Orientation(std::shared_ptr<const Graph> graph, std::uint64_t bits)
    : graph_(std::move(graph)), bits_(bits) {
  if (!graph_) throw std::invalid_argument("orientation needs a graph");
  const auto m = graph_->edge_count();
  if (m > 64) throw LimitExceeded("orientations are limited to graphs with at most 64 edges");
  if (m < 64 && (bits_ >> m) != 0) throw std::invalid_argument("direction bits set past the edge count");
}

std::pair<Vertex, Vertex> Orientation::arc(std::size_t edge) const {
  const auto& e = graph_->edge(edge);
  return points_up(edge) ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

Orientation Orientation::flipped(std::size_t edge) const {
  if (edge >= graph_->edge_count()) throw std::out_of_range("edge index out of range");
  return Orientation(graph_, bits_ ^ (std::uint64_t{1} << edge));
}

AcyclicityTester::AcyclicityTester(const Graph& g)
    : edges_(g.edges().begin(), g.edges().end()), incident_(g.vertex_count()), indegree_(g.vertex_count()) {
  if (g.edge_count() > 64) throw LimitExceeded("acyclicity test limited to 64 edges");
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    incident_[edges_[i].u].push_back({edges_[i].v, i, true});
    incident_[edges_[i].v].push_back({edges_[i].u, i, false});
  }
  stack_.reserve(g.vertex_count());
}

bool AcyclicityTester::operator()(std::uint64_t bits) {
  std::fill(indegree_.begin(), indegree_.end(), 0);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const bool up = ((bits >> i) & 1u) != 0;
    ++indegree_[up ? edges_[i].v : edges_[i].u];
  }
  stack_.clear();
  for (Vertex v = 0; v < indegree_.size(); ++v)
    if (indegree_[v] == 0) stack_.push_back(v);

  std::size_t removed = 0;
  while (!stack_.empty()) {
    const Vertex v = stack_.back();
    stack_.pop_back();
    ++removed;
    for (const auto& inc : incident_[v]) {
      const bool up = ((bits >> inc.edge) & 1u) != 0;
      if (up == inc.low_end && --indegree_[inc.other] == 0) stack_.push_back(inc.other);
    }
  }
  return removed == indegree_.size();
}

bool is_acyclic(const Orientation& o) { return AcyclicityTester(o.graph())(o.bits()); }

namespace {

void check_brute_force_cap(const Graph& g) {
  if (g.edge_count() > kMaxBruteForceEdges) {
    throw LimitExceeded("brute force limited to " + std::to_string(kMaxBruteForceEdges) + " edges, graph has " +
                        std::to_string(g.edge_count()));
  }
}

}  // namespace

Nat count_acyclic_bruteforce(const Graph& g) {
  check_brute_force_cap(g);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  return Nat(detail::parallel_count(total, [&g] { return AcyclicityTester(g); }));
}

Nat flippable_count_bruteforce(const Graph& g, std::size_t edge) {
  check_brute_force_cap(g);
  if (edge >= g.edge_count()) throw std::out_of_range("edge index " + std::to_string(edge) + " out of range");
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  const std::uint64_t flip = std::uint64_t{1} << edge;
  return Nat(detail::parallel_count(total, [&g, flip] {
    return [tester = AcyclicityTester(g), flip](std::uint64_t bits) mutable {
      return tester(bits) && tester(bits ^ flip);
    };
  }));
}

}  // namespace acyclic
