#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "ncv/graph.hpp"

namespace ncv {

/// Full listing of Aut(G) as vertex permutations (not generators).
struct AutomorphismGroup {
  int n = 0;
  std::vector<std::vector<std::uint8_t>> elements;
  std::size_t order() const { return elements.size(); }
};

/// Backtracking search with iterated neighborhood-color refinement for
/// pruning. Throws BudgetError when the group order passes max_order.
AutomorphismGroup automorphisms(const Graph& g, std::size_t max_order = 1'000'000);

/// Edge-level action of a vertex permutation: eperm[e] is the image edge id.
std::vector<int> edge_action(const Graph& g, std::span<const std::uint8_t> vperm);

inline EdgeMask permute_edges(std::span<const int> eperm, EdgeMask m) {
  EdgeMask out = 0;
  while (m) {
    int e = std::countr_zero(m);
    m &= m - 1;
    out |= EdgeMask{1} << eperm[static_cast<std::size_t>(e)];
  }
  return out;
}

}  // namespace ncv
