#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncv {

// Edge and vertex sets are single-word bitmasks; every graph handled here
// fits in 64 edges (see SizeBudget).
using EdgeMask = std::uint64_t;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 64;

struct Edge {
  int u = 0;
  int v = 0;  // normalized: u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph. Edge ids are 0..|E|-1 in lexicographic (u,v)
/// order and stable for the lifetime of the graph; adjacency is kept as
/// per-vertex neighbor bitsets. Safe to share across threads once built.
class Graph {
 public:
  /// Validates and normalizes: orients pairs as u < v, sorts them, rejects
  /// loops, parallel edges, out-of-range endpoints and >64 edges/vertices.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  /// Edge id for the pair {u,v}, or -1 when not adjacent.
  int edge_id(int u, int v) const {
    return edge_index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(v)];
  }
  bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
  VertexMask neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  int component_count() const { return component_count_; }

  EdgeMask all_edges() const;
  /// Edges with exactly one endpoint in x.
  EdgeMask cut(VertexMask x) const;

  /// Hash of (n, edge list); used to detect operands built on different graphs.
  std::uint64_t structural_id() const { return id_; }

 private:
  Graph() = default;

  int n_ = 0;
  int component_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
  std::vector<std::int16_t> edge_index_;
  std::uint64_t id_ = 0;
};

struct SizeBudget {
  int max_n = 16;
  int max_edges = kMaxEdges;
};

/// Named families used by the CLI and tests. Vertex numbering per family is
/// frozen and documented in the README so edge-list fixtures stay valid.
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
Graph cycle_graph(int n);
Graph petersen_graph();
Graph heawood_graph();
Graph octahedron_graph();
Graph prism_graph(int p);         // C_p x K_2
Graph matching_join_kk(int p);    // two K_p joined by a perfect matching
Graph matching_join_kbar(int p);  // K_p with a pendant edge per vertex
Graph join_kkbar(int p);          // K_p joined completely to p isolated vertices
Graph hypercube_graph(int d);     // d <= 6

/// Families: complete n | complete_bipartite p q | cycle n | petersen |
/// heawood | octahedron | prism p | matching_join_kk p | matching_join_kbar p |
/// join_kkbar p | hypercube d. Throws UnknownNameError / BudgetError.
Graph build_named(const std::string& family, std::span<const int> params,
                  const SizeBudget& budget = {});

/// Compact graph descriptors: "K5", "K3,4", "C6", "Q3", "petersen",
/// "heawood", "octahedron", "cube", "prism:4", "matching_join_kk:3",
/// "matching_join_kbar:3", "join_kkbar:3", "g6:<graph6 line>".
Graph parse_graph_spec(const std::string& text, const SizeBudget& budget = {});

/// Lexicographic order on edge-id sets of equal or unequal size: the set
/// containing the lowest differing edge id is the smaller one.
inline bool lex_mask_less(EdgeMask a, EdgeMask b) {
  EdgeMask diff = a ^ b;
  if (diff == 0) return false;
  EdgeMask low = diff & (~diff + 1);
  return (a & low) != 0;
}

}  // namespace ncv
