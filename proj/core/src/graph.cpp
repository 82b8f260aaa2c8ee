#include "ncv/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>

#include "ncv/errors.hpp"
#include "ncv/graph6.hpp"

namespace ncv {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0 || n > kMaxVertices)
    throw BudgetError("vertex count " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxVertices));
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw FormatError("edge endpoint out of range");
    if (e.u == e.v) throw FormatError("loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw FormatError("parallel edges are not allowed");
  if (static_cast<int>(edges.size()) > kMaxEdges)
    throw BudgetError("edge count " + std::to_string(edges.size()) + " exceeds the " +
                      std::to_string(kMaxEdges) + "-edge capacity");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adjacency_.assign(static_cast<std::size_t>(n), 0);
  g.edge_index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  Dsu dsu(n);
  int components = n;
  for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
    const Edge& e = g.edges_[static_cast<std::size_t>(id)];
    g.adjacency_[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
    g.adjacency_[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
    g.edge_index_[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(e.v)] = static_cast<std::int16_t>(id);
    g.edge_index_[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(e.u)] = static_cast<std::int16_t>(id);
    if (dsu.unite(e.u, e.v)) --components;
  }
  g.component_count_ = components;

  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, static_cast<std::uint64_t>(n));
  for (const Edge& e : g.edges_)
    h = fnv1a(h, (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint64_t>(e.v));
  g.id_ = h;
  return g;
}

int Graph::degree(int v) const {
  return std::popcount(adjacency_[static_cast<std::size_t>(v)]);
}

EdgeMask Graph::all_edges() const {
  const int m = edge_count();
  return m == 64 ? ~EdgeMask{0} : ((EdgeMask{1} << m) - 1);
}

EdgeMask Graph::cut(VertexMask x) const {
  EdgeMask out = 0;
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    if (((x >> e.u) ^ (x >> e.v)) & 1) out |= EdgeMask{1} << id;
  }
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite_graph(int p, int q) {
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) edges.push_back({u, p + v});
  return Graph::from_edges(p + q, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, std::move(edges));
}

// Outer 5-cycle 0..4, inner pentagram 5..9 (5+i joined to 5+((i+2) mod 5)),
// spokes i -- i+5.
Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, i + 5});
  }
  return Graph::from_edges(10, std::move(edges));
}

// Hamiltonian cycle 0..13 plus the chord i -- i+5 (mod 14) at every even i.
Graph heawood_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
  for (int i = 0; i < 14; i += 2) edges.push_back({i, (i + 5) % 14});
  return Graph::from_edges(14, std::move(edges));
}

// Antipodal pairs (i, i+3); all other pairs adjacent.
Graph octahedron_graph() {
  std::vector<Edge> edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v - u != 3) edges.push_back({u, v});
  return Graph::from_edges(6, std::move(edges));
}

// Bottom cycle 0..p-1, top cycle p..2p-1, spokes i -- i+p.
Graph prism_graph(int p) {
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    edges.push_back({i, (i + 1) % p});
    edges.push_back({p + i, p + (i + 1) % p});
    edges.push_back({i, i + p});
  }
  return Graph::from_edges(2 * p, std::move(edges));
}

// First K_p on 0..p-1, second on p..2p-1, matching i -- i+p.
Graph matching_join_kk(int p) {
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) {
      edges.push_back({u, v});
      edges.push_back({p + u, p + v});
    }
  for (int i = 0; i < p; ++i) edges.push_back({i, i + p});
  return Graph::from_edges(2 * p, std::move(edges));
}

// K_p on 0..p-1 with pendant vertex p+i hanging from i.
Graph matching_join_kbar(int p) {
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) edges.push_back({u, v});
  for (int i = 0; i < p; ++i) edges.push_back({i, i + p});
  return Graph::from_edges(2 * p, std::move(edges));
}

// K_p on 0..p-1 joined completely to the independent set p..2p-1.
Graph join_kkbar(int p) {
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) edges.push_back({u, v});
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v) edges.push_back({u, p + v});
  return Graph::from_edges(2 * p, std::move(edges));
}

// Binary-coordinate labels: vertices 0..2^d-1, edges between labels at
// Hamming distance 1.
Graph hypercube_graph(int d) {
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b)
      if (!(u & (1 << b))) edges.push_back({u, u | (1 << b)});
  return Graph::from_edges(n, std::move(edges));
}

namespace {

void check_budget(const SizeBudget& budget, long n, long m, const std::string& what) {
  if (n > budget.max_n)
    throw BudgetError(what + ": " + std::to_string(n) + " vertices exceeds budget " +
                      std::to_string(budget.max_n));
  if (m > budget.max_edges)
    throw BudgetError(what + ": " + std::to_string(m) + " edges exceeds budget " +
                      std::to_string(budget.max_edges));
}

void need_params(const std::string& family, std::span<const int> params, std::size_t want) {
  if (params.size() != want)
    throw DomainError(family + " expects " + std::to_string(want) + " parameter(s)");
  for (int p : params)
    if (p <= 0) throw DomainError(family + ": parameters must be positive");
}

}  // namespace

Graph build_named(const std::string& family, std::span<const int> params,
                  const SizeBudget& budget) {
  if (family == "complete") {
    need_params(family, params, 1);
    const long n = params[0];
    check_budget(budget, n, n * (n - 1) / 2, family);
    return complete_graph(params[0]);
  }
  if (family == "complete_bipartite") {
    need_params(family, params, 2);
    const long p = params[0], q = params[1];
    check_budget(budget, p + q, p * q, family);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (family == "cycle") {
    need_params(family, params, 1);
    if (params[0] < 3) throw DomainError("cycle: length must be at least 3");
    check_budget(budget, params[0], params[0], family);
    return cycle_graph(params[0]);
  }
  if (family == "petersen") {
    need_params(family, params, 0);
    check_budget(budget, 10, 15, family);
    return petersen_graph();
  }
  if (family == "heawood") {
    need_params(family, params, 0);
    check_budget(budget, 14, 21, family);
    return heawood_graph();
  }
  if (family == "octahedron") {
    need_params(family, params, 0);
    check_budget(budget, 6, 12, family);
    return octahedron_graph();
  }
  if (family == "prism") {
    need_params(family, params, 1);
    if (params[0] < 3) throw DomainError("prism: cycle length must be at least 3");
    check_budget(budget, 2L * params[0], 3L * params[0], family);
    return prism_graph(params[0]);
  }
  if (family == "matching_join_kk") {
    need_params(family, params, 1);
    const long p = params[0];
    check_budget(budget, 2 * p, p * (p - 1) + p, family);
    return matching_join_kk(params[0]);
  }
  if (family == "matching_join_kbar") {
    need_params(family, params, 1);
    const long p = params[0];
    check_budget(budget, 2 * p, p * (p - 1) / 2 + p, family);
    return matching_join_kbar(params[0]);
  }
  if (family == "join_kkbar") {
    need_params(family, params, 1);
    const long p = params[0];
    check_budget(budget, 2 * p, p * (p - 1) / 2 + p * p, family);
    return join_kkbar(params[0]);
  }
  if (family == "hypercube") {
    need_params(family, params, 1);
    const int d = params[0];
    if (d > 6) throw DomainError("hypercube: dimension must be at most 6");
    check_budget(budget, 1L << d, static_cast<long>(d) << (d - 1), family);
    return hypercube_graph(d);
  }
  throw UnknownNameError("unknown graph family: " + family);
}

namespace {

int parse_int(std::string_view s, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw FormatError("bad integer in " + what);
  return value;
}

}  // namespace

Graph parse_graph_spec(const std::string& text, const SizeBudget& budget) {
  if (text.empty()) throw UnknownNameError("empty graph descriptor");
  if (text.starts_with("g6:")) {
    Graph g = parse_graph6(text.substr(3));
    check_budget(budget, g.vertex_count(), g.edge_count(), "g6 input");
    return g;
  }
  if (text == "cube" || text == "Q3" || text == "q3")
    return build_named("hypercube", std::vector<int>{3}, budget);
  if ((text[0] == 'K' || text[0] == 'k') && text.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(text[1]))) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
      return build_named("complete", std::vector<int>{parse_int(text.substr(1), text)},
                         budget);
    return build_named("complete_bipartite",
                       std::vector<int>{parse_int(text.substr(1, comma - 1), text),
                                        parse_int(text.substr(comma + 1), text)},
                       budget);
  }
  if ((text[0] == 'C' || text[0] == 'c') && text.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(text[1])))
    return build_named("cycle", std::vector<int>{parse_int(text.substr(1), text)}, budget);
  if ((text[0] == 'Q' || text[0] == 'q') && text.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(text[1])))
    return build_named("hypercube", std::vector<int>{parse_int(text.substr(1), text)},
                       budget);

  const auto colon = text.find(':');
  std::string family = text.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::string_view rest = std::string_view(text).substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      params.push_back(parse_int(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return build_named(family, params, budget);
}

}  // namespace ncv
