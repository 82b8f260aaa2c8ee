#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ncv/automorphism.hpp"
#include "ncv/cycles.hpp"
#include "ncv/graph.hpp"

namespace ncv {

/// A signing of a fixed graph: the bitmask of negative edges.
struct Signing {
  std::uint64_t graph_id = 0;
  EdgeMask negatives = 0;
};

Signing make_signing(const Graph& g, EdgeMask negatives);
Signing signing_from_pairs(const Graph& g,
                           std::span<const std::pair<int, int>> pairs);

/// Exact per-length counts of negative cycles, defined on the spectrum.
struct NegCycleVector {
  std::vector<int> lengths;
  std::vector<std::int64_t> counts;

  bool zero() const;
  std::int64_t at_length(int l) const;
  friend bool operator==(const NegCycleVector&, const NegCycleVector&) = default;
};

/// c_l^- = number of l-cycles meeting the negative set in an odd number of
/// edges.
NegCycleVector ncv(const CycleCatalog& cat, const Signing& s);

/// Negate all edges across the cut (x, V \ x). An involution; preserves ncv.
Signing switched(const Graph& g, const Signing& s, VertexMask x);

/// Negate every edge.
Signing negated(const Graph& g, const Signing& s);

bool is_balanced(const CycleCatalog& cat, const Signing& s);

/// GF(2) scaffolding: a spanning forest on minimal edge ids and the
/// fundamental cycle of each non-forest edge. Switching sets are exactly the
/// cut space, the orthogonal complement of the cycle space.
struct Gf2Spaces {
  std::uint64_t graph_id = 0;
  EdgeMask forest = 0;
  std::vector<int> free_edges;          // non-forest edge ids, ascending
  std::vector<EdgeMask> cycle_basis;    // fundamental cycle of free_edges[i]
  int cut_space_dim = 0;                // n - component_count

  bool in_cut_space(EdgeMask d) const;
};

Gf2Spaces gf2_spaces(const Graph& g);

/// True iff the symmetric difference of the negative sets lies in the cut
/// space (even intersection with every fundamental cycle).
bool switching_equivalent(const Gf2Spaces& spaces, const Signing& a, const Signing& b);

/// True iff some automorphism maps a onto a switching of b.
bool switching_isomorphic(const Graph& g, const Gf2Spaces& spaces, const Signing& a,
                          const Signing& b, const AutomorphismGroup& autos);

/// One representative per switching class: every spanning-forest edge
/// positive, all 2^{|E|-n+c} assignments to the free edges, streamed in
/// ascending index (equivalently bitmask) order.
class SwitchingClassReps {
 public:
  SwitchingClassReps(const Graph& g, std::uint64_t max_reps = std::uint64_t{1} << 22);

  std::uint64_t size() const { return count_; }
  EdgeMask mask_at(std::uint64_t index) const;
  Signing at(std::uint64_t index) const;

  /// The unique forest-positive signing switching-equivalent to s.
  EdgeMask project(EdgeMask negatives) const;
  /// Index of project(negatives) in the stream.
  std::uint64_t index_of(EdgeMask negatives) const;

  const Gf2Spaces& spaces() const { return spaces_; }

 private:
  const Graph* g_;
  Gf2Spaces spaces_;
  std::uint64_t count_ = 0;
  // Forest rooted per component; project() propagates switching parities
  // from the roots down this order.
  std::vector<int> bfs_order_;
  std::vector<int> parent_vertex_;
  std::vector<int> parent_edge_;
};

std::vector<Signing> class_representatives(const Graph& g,
                                           std::uint64_t max_reps = std::uint64_t{1} << 22);

}  // namespace ncv
