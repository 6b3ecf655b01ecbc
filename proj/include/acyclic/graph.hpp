#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acyclic/combinum.hpp"
#include "acyclic/formulas.hpp"

namespace acyclic {

using Vertex = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are kept sorted so that edge indices, and therefore orientation
/// bitmasks, are reproducible. Loops and parallel edges are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  Graph with_edge(Vertex a, Vertex b) const;
  Graph without_edge(std::size_t index) const;

  std::string to_string() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Block A is 0..n1-1, block B is n1..n1+n2-1. Edge (i, n1+j) has index i*n2+j.
Graph complete_bipartite(std::size_t n1, std::size_t n2);

/// Adds {0, 1}, an edge inside block A. Requires n1 >= 2.
Graph with_edge_added_in_block1(const Graph& g, std::size_t n1);

/// Removes the first edge in canonical order ({0, n1} for a complete bipartite
/// graph). Any edge would do there since all edges are equivalent.
Graph with_edge_removed(const Graph& g);

/// The concrete graph described by a BipartiteSpec.
Graph graph_for(const BipartiteSpec& spec);

/// Maximum edge count for orientation enumeration (2^24 orientations).
inline constexpr std::size_t kMaxBruteForceEdges = 24;

/// One direction bit per edge of a graph. Bit i set means edge i points from
/// its lower-labelled endpoint to its higher-labelled one.
class Orientation {
 public:
  /// Throws LimitExceeded for graphs with more than 64 edges and
  /// std::invalid_argument if bits are set past the edge count.
  Orientation(std::shared_ptr<const Graph> graph, std::uint64_t bits);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  std::uint64_t bits() const { return bits_; }
  bool points_up(std::size_t edge) const { return ((bits_ >> edge) & 1u) != 0; }

  /// Tail and head of edge i under this orientation.
  std::pair<Vertex, Vertex> arc(std::size_t edge) const;

  Orientation flipped(std::size_t edge) const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::uint64_t bits_ = 0;
};

/// Reusable acyclicity test for many orientations of one graph. Holds the
/// incidence lists and peeling scratch; not safe to share across threads.
class AcyclicityTester {
 public:
  explicit AcyclicityTester(const Graph& g);

  /// Topological peeling: repeatedly remove in-degree-0 vertices; acyclic
  /// iff every vertex gets removed.
  bool operator()(std::uint64_t bits);

 private:
  struct Incidence {
    Vertex other;
    std::uint32_t edge;
    bool low_end;  // this vertex is the lower endpoint
  };
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incident_;
  std::vector<std::uint32_t> indegree_;
  std::vector<Vertex> stack_;
};

bool is_acyclic(const Orientation& o);

/// Number of acyclic orientations by exhaustive enumeration.
/// Throws LimitExceeded above kMaxBruteForceEdges.
Nat count_acyclic_bruteforce(const Graph& g);

/// Number of acyclic orientations that remain acyclic after reversing `edge`.
Nat flippable_count_bruteforce(const Graph& g, std::size_t edge);

}  // namespace acyclic
