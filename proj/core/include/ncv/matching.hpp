#pragma once

#include <vector>

#include "ncv/automorphism.hpp"
#include "ncv/graph.hpp"

namespace ncv {

struct Matching {
  EdgeMask edges = 0;
  int size = 0;
};

bool is_matching_mask(const Graph& g, EdgeMask edges);

/// Throws DomainError if the mask is not a matching.
Matching matching_from_mask(const Graph& g, EdgeMask edges);

/// True iff the setwise stabilizer of the matching inside Aut(G) induces
/// the full symmetric group on its edges (checked as: the set of induced
/// edge permutations has size m!).
bool is_permutable(const Graph& g, const Matching& mat, const AutomorphismGroup& autos);

/// All permutable m-matchings up to the Aut(G) action, one representative
/// per orbit (the lexicographically least edge-id set), sorted. Empty when
/// none exist.
std::vector<Matching> find_permutable_matchings(const Graph& g, int m,
                                                const AutomorphismGroup& autos);

}  // namespace ncv
