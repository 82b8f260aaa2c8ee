#include "ncv/matching.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ncv/errors.hpp"

namespace ncv {

bool is_matching_mask(const Graph& g, EdgeMask edges) {
  VertexMask covered = 0;
  while (edges) {
    const int e = std::countr_zero(edges);
    edges &= edges - 1;
    const auto [u, v] = g.edge(e);
    const VertexMask ends = (VertexMask{1} << u) | (VertexMask{1} << v);
    if (covered & ends) return false;
    covered |= ends;
  }
  return true;
}

Matching matching_from_mask(const Graph& g, EdgeMask edges) {
  if (edges & ~g.all_edges())
    throw GraphMismatchError("matching: edge ids outside the graph");
  if (!is_matching_mask(g, edges)) throw DomainError("edge set is not a matching");
  return Matching{edges, std::popcount(edges)};
}

namespace {

std::vector<std::vector<int>> all_edge_actions(const Graph& g,
                                               const AutomorphismGroup& autos) {
  std::vector<std::vector<int>> actions;
  actions.reserve(autos.order());
  for (const auto& vperm : autos.elements) actions.push_back(edge_action(g, vperm));
  return actions;
}

std::size_t factorial_sz(int m) {
  std::size_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

// The permutation of the matching's edges induced by one edge action,
// encoded in nibbles (one per edge, so up to 16 edges).
std::uint64_t induced_code(const std::vector<int>& sorted_edges,
                           const std::vector<int>& action) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < sorted_edges.size(); ++i) {
    const int image = action[static_cast<std::size_t>(sorted_edges[i])];
    const auto it = std::lower_bound(sorted_edges.begin(), sorted_edges.end(), image);
    code |= static_cast<std::uint64_t>(it - sorted_edges.begin()) << (4 * i);
  }
  return code;
}

}  // namespace

bool is_permutable(const Graph& g, const Matching& mat, const AutomorphismGroup& autos) {
  if (mat.size == 0) return true;
  if (mat.size > 16) throw DomainError("permutability check supports at most 16 edges");
  std::vector<int> edges;
  EdgeMask m = mat.edges;
  while (m) {
    edges.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  std::set<std::uint64_t> induced;
  const std::size_t want = factorial_sz(mat.size);
  for (const auto& vperm : autos.elements) {
    const auto action = edge_action(g, vperm);
    if (permute_edges(action, mat.edges) != mat.edges) continue;
    induced.insert(induced_code(edges, action));
    if (induced.size() == want) return true;
  }
  return induced.size() == want;
}

std::vector<Matching> find_permutable_matchings(const Graph& g, int m,
                                                const AutomorphismGroup& autos) {
  if (m < 1) throw DomainError("matching size must be at least 1");
  const auto actions = all_edge_actions(g, autos);

  // All m-matchings, generated in lexicographic edge-id order.
  std::vector<EdgeMask> matchings;
  std::vector<int> chosen;
  auto extend = [&](auto&& self, int first, EdgeMask mask, VertexMask covered) -> void {
    if (static_cast<int>(chosen.size()) == m) {
      matchings.push_back(mask);
      return;
    }
    for (int e = first; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edge(e);
      const VertexMask ends = (VertexMask{1} << u) | (VertexMask{1} << v);
      if (covered & ends) continue;
      chosen.push_back(e);
      self(self, e + 1, mask | (EdgeMask{1} << e), covered | ends);
      chosen.pop_back();
    }
  };
  extend(extend, 0, 0, 0);

  std::vector<Matching> kinds;
  for (EdgeMask mask : matchings) {
    bool least_in_orbit = true;
    for (const auto& action : actions) {
      if (lex_mask_less(permute_edges(action, mask), mask)) {
        least_in_orbit = false;
        break;
      }
    }
    if (!least_in_orbit) continue;
    Matching mat{mask, m};
    if (is_permutable(g, mat, autos)) kinds.push_back(mat);
  }
  std::sort(kinds.begin(), kinds.end(),
            [](const Matching& a, const Matching& b) { return lex_mask_less(a.edges, b.edges); });
  return kinds;
}

}  // namespace ncv
