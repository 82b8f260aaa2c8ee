#include "ncv/automorphism.hpp"

#include <algorithm>
#include <bit>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

// Iterated neighborhood refinement: recolor by (color, sorted neighbor
// colors) until stable. Automorphism-invariant, so search candidates are
// restricted to their own color class.
std::vector<int> stable_colors(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);

  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[static_cast<std::size_t>(v)]};
      VertexMask nb = g.neighbors(v);
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        s.push_back(color[static_cast<std::size_t>(u)]);
      }
      std::sort(s.begin() + 1, s.end());
      sig[static_cast<std::size_t>(v)] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int c = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[static_cast<std::size_t>(sorted[i].second)] = c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct AutoSearch {
  const Graph& g;
  std::size_t max_order;
  std::vector<int> color;
  std::vector<int> order;  // search order: BFS so new vertices touch mapped ones
  std::vector<int> image;  // image[v], -1 unmapped
  VertexMask used = 0;
  std::vector<std::vector<std::uint8_t>> found;

  void search(std::size_t depth) {
    const int n = g.vertex_count();
    if (depth == order.size()) {
      if (found.size() >= max_order)
        throw BudgetError("automorphism listing exceeded the cap of " +
                          std::to_string(max_order));
      std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v)
        perm[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(image[static_cast<std::size_t>(v)]);
      found.push_back(std::move(perm));
      return;
    }
    const int v = order[depth];
    for (int u = 0; u < n; ++u) {
      if ((used >> u) & 1) continue;
      if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth; ++d) {
        const int w = order[d];
        if (g.adjacent(v, w) != g.adjacent(u, image[static_cast<std::size_t>(w)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = u;
      used |= VertexMask{1} << u;
      search(depth + 1);
      used &= ~(VertexMask{1} << u);
      image[static_cast<std::size_t>(v)] = -1;
    }
  }
};

}  // namespace

AutomorphismGroup automorphisms(const Graph& g, std::size_t max_order) {
  const int n = g.vertex_count();
  AutoSearch s{g, max_order};
  s.color = stable_colors(g);
  s.image.assign(static_cast<std::size_t>(n), -1);

  // BFS order over components.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = 1;
    s.order.push_back(r);
    for (std::size_t head = s.order.size() - 1; head < s.order.size(); ++head) {
      VertexMask nb = g.neighbors(s.order[head]);
      while (nb) {
        const int v = std::countr_zero(nb);
        nb &= nb - 1;
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          s.order.push_back(v);
        }
      }
    }
  }

  s.search(0);
  AutomorphismGroup group;
  group.n = n;
  group.elements = std::move(s.found);
  return group;
}

std::vector<int> edge_action(const Graph& g, std::span<const std::uint8_t> vperm) {
  std::vector<int> eperm(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const int id = g.edge_id(vperm[static_cast<std::size_t>(u)],
                             vperm[static_cast<std::size_t>(v)]);
    eperm[static_cast<std::size_t>(e)] = id;
  }
  return eperm;
}

}  // namespace ncv
