#include "ncv/signing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

void check_same_graph(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a != b)
    throw GraphMismatchError(std::string(what) + ": operands built on different graphs");
}

}  // namespace

Signing make_signing(const Graph& g, EdgeMask negatives) {
  if (negatives & ~g.all_edges())
    throw GraphMismatchError("signing: negative set outside the edge id range");
  return Signing{g.structural_id(), negatives};
}

Signing signing_from_pairs(const Graph& g, std::span<const std::pair<int, int>> pairs) {
  EdgeMask mask = 0;
  for (auto [u, v] : pairs) {
    const int id = g.edge_id(u, v);
    if (id < 0)
      throw FormatError("signing: no edge " + std::to_string(u) + "-" + std::to_string(v));
    mask |= EdgeMask{1} << id;
  }
  return Signing{g.structural_id(), mask};
}

bool NegCycleVector::zero() const {
  return std::all_of(counts.begin(), counts.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t NegCycleVector::at_length(int l) const {
  for (std::size_t i = 0; i < lengths.size(); ++i)
    if (lengths[i] == l) return counts[i];
  return 0;
}

NegCycleVector ncv(const CycleCatalog& cat, const Signing& s) {
  check_same_graph(cat.graph_id, s.graph_id, "ncv");
  NegCycleVector v;
  v.lengths = cat.spectrum;
  v.counts.reserve(cat.spectrum.size());
  for (int l : cat.spectrum) {
    std::int64_t negative = 0;
    for (EdgeMask cycle : cat.cycles_of_length(l))
      negative += std::popcount(cycle & s.negatives) & 1;
    v.counts.push_back(negative);
  }
  return v;
}

Signing switched(const Graph& g, const Signing& s, VertexMask x) {
  check_same_graph(g.structural_id(), s.graph_id, "switched");
  return Signing{s.graph_id, s.negatives ^ g.cut(x)};
}

Signing negated(const Graph& g, const Signing& s) {
  check_same_graph(g.structural_id(), s.graph_id, "negated");
  return Signing{s.graph_id, s.negatives ^ g.all_edges()};
}

bool is_balanced(const CycleCatalog& cat, const Signing& s) {
  check_same_graph(cat.graph_id, s.graph_id, "is_balanced");
  for (int l : cat.spectrum)
    for (EdgeMask cycle : cat.cycles_of_length(l))
      if (std::popcount(cycle & s.negatives) & 1) return false;
  return true;
}

bool Gf2Spaces::in_cut_space(EdgeMask d) const {
  for (EdgeMask cycle : cycle_basis)
    if (std::popcount(cycle & d) & 1) return false;
  return true;
}

Gf2Spaces gf2_spaces(const Graph& g) {
  const int n = g.vertex_count();
  Gf2Spaces sp;
  sp.graph_id = g.structural_id();

  // Spanning forest on minimal edge ids.
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) {
      comp[static_cast<std::size_t>(x)] =
          comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
      x = comp[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      comp[static_cast<std::size_t>(rv)] = ru;
      sp.forest |= EdgeMask{1} << e;
    } else {
      sp.free_edges.push_back(e);
    }
  }
  sp.cut_space_dim = n - g.component_count();

  // Forest paths by BFS from each root; path_to_root[v] as an edge mask.
  std::vector<EdgeMask> path_to_root(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = 1;
    order.assign(1, r);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int u = order[head];
      VertexMask nb = g.neighbors(u);
      while (nb) {
        const int v = std::countr_zero(nb);
        nb &= nb - 1;
        const int e = g.edge_id(u, v);
        if (!((sp.forest >> e) & 1) || seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        path_to_root[static_cast<std::size_t>(v)] =
            path_to_root[static_cast<std::size_t>(u)] | (EdgeMask{1} << e);
        order.push_back(v);
      }
    }
  }
  for (int e : sp.free_edges) {
    const auto [u, v] = g.edge(e);
    sp.cycle_basis.push_back(path_to_root[static_cast<std::size_t>(u)] ^
                             path_to_root[static_cast<std::size_t>(v)] ^
                             (EdgeMask{1} << e));
  }
  return sp;
}

bool switching_equivalent(const Gf2Spaces& spaces, const Signing& a, const Signing& b) {
  check_same_graph(spaces.graph_id, a.graph_id, "switching_equivalent");
  check_same_graph(a.graph_id, b.graph_id, "switching_equivalent");
  return spaces.in_cut_space(a.negatives ^ b.negatives);
}

bool switching_isomorphic(const Graph& g, const Gf2Spaces& spaces, const Signing& a,
                          const Signing& b, const AutomorphismGroup& autos) {
  check_same_graph(g.structural_id(), a.graph_id, "switching_isomorphic");
  check_same_graph(a.graph_id, b.graph_id, "switching_isomorphic");
  for (const auto& vperm : autos.elements) {
    const auto eperm = edge_action(g, vperm);
    if (spaces.in_cut_space(permute_edges(eperm, a.negatives) ^ b.negatives)) return true;
  }
  return false;
}

SwitchingClassReps::SwitchingClassReps(const Graph& g, std::uint64_t max_reps)
    : g_(&g), spaces_(gf2_spaces(g)) {
  const std::size_t free = spaces_.free_edges.size();
  if (free >= 63 || (std::uint64_t{1} << free) > max_reps)
    throw BudgetError("switching-class stream of 2^" + std::to_string(free) +
                      " representatives exceeds the budget of " + std::to_string(max_reps));
  count_ = std::uint64_t{1} << free;

  const int n = g.vertex_count();
  parent_vertex_.assign(static_cast<std::size_t>(n), -1);
  parent_edge_.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = 1;
    bfs_order_.push_back(r);
    for (std::size_t head = bfs_order_.size() - 1; head < bfs_order_.size(); ++head) {
      const int u = bfs_order_[head];
      VertexMask nb = g.neighbors(u);
      while (nb) {
        const int v = std::countr_zero(nb);
        nb &= nb - 1;
        const int e = g.edge_id(u, v);
        if (!((spaces_.forest >> e) & 1) || seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        parent_vertex_[static_cast<std::size_t>(v)] = u;
        parent_edge_[static_cast<std::size_t>(v)] = e;
        bfs_order_.push_back(v);
      }
    }
  }
}

EdgeMask SwitchingClassReps::mask_at(std::uint64_t index) const {
  EdgeMask mask = 0;
  for (std::size_t j = 0; j < spaces_.free_edges.size(); ++j)
    if ((index >> j) & 1) mask |= EdgeMask{1} << spaces_.free_edges[j];
  return mask;
}

Signing SwitchingClassReps::at(std::uint64_t index) const {
  return Signing{g_->structural_id(), mask_at(index)};
}

EdgeMask SwitchingClassReps::project(EdgeMask negatives) const {
  // Pick switching parities down the forest so every forest edge ends up
  // positive; the cut of the parity-1 set normalizes the signing.
  VertexMask x = 0;
  for (int v : bfs_order_) {
    const int p = parent_vertex_[static_cast<std::size_t>(v)];
    if (p < 0) continue;  // component root keeps parity 0
    const int e = parent_edge_[static_cast<std::size_t>(v)];
    const int parity =
        static_cast<int>((x >> p) & 1) ^ static_cast<int>((negatives >> e) & 1);
    x |= static_cast<VertexMask>(parity) << v;
  }
  return negatives ^ g_->cut(x);
}

std::uint64_t SwitchingClassReps::index_of(EdgeMask negatives) const {
  const EdgeMask rep = project(negatives);
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < spaces_.free_edges.size(); ++j)
    if ((rep >> spaces_.free_edges[j]) & 1) index |= std::uint64_t{1} << j;
  return index;
}

std::vector<Signing> class_representatives(const Graph& g, std::uint64_t max_reps) {
  SwitchingClassReps stream(g, max_reps);
  std::vector<Signing> reps;
  reps.reserve(static_cast<std::size_t>(stream.size()));
  for (std::uint64_t i = 0; i < stream.size(); ++i) reps.push_back(stream.at(i));
  return reps;
}

}  // namespace ncv
