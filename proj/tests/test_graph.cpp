#include <doctest.h>

#include <bit>
#include <numeric>

#include "ncv/errors.hpp"
#include "ncv/graph.hpp"

using namespace ncv;

TEST_SUITE_BEGIN("graph");

TEST_CASE("named families have the advertised sizes") {
  struct Row {
    const char* spec;
    int n, m;
  };
  const Row rows[] = {
      {"K4", 4, 6},          {"petersen", 10, 15},  {"heawood", 14, 21},
      {"octahedron", 6, 12}, {"prism:3", 6, 9},     {"prism:4", 8, 12},
      {"C6", 6, 6},          {"K3,4", 7, 12},       {"Q3", 8, 12},
      {"matching_join_kk:3", 6, 9}, {"matching_join_kbar:4", 8, 10},
      {"join_kkbar:3", 6, 12}};
  for (const Row& row : rows) {
    CAPTURE(row.spec);
    const Graph g = parse_graph_spec(row.spec);
    CHECK(g.vertex_count() == row.n);
    CHECK(g.edge_count() == row.m);
  }
}

TEST_CASE("handshake holds for every family") {
  for (const char* spec : {"K6", "K3,3", "petersen", "heawood", "octahedron", "prism:5",
                           "C7", "Q4", "matching_join_kbar:5", "join_kkbar:4"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("complete and bipartite edge counts") {
  for (int n = 1; n <= 10; ++n) CHECK(complete_graph(n).edge_count() == n * (n - 1) / 2);
  for (int p = 1; p <= 4; ++p)
    for (int q = p; q <= 5; ++q)
      CHECK(complete_bipartite_graph(p, q).edge_count() == p * q);
  for (int p = 3; p <= 6; ++p) CHECK(prism_graph(p).edge_count() == 3 * p);
}

TEST_CASE("prism 3 equals the K3 matching join") {
  const Graph a = prism_graph(3);
  const Graph b = matching_join_kk(3);
  REQUIRE(a.edge_count() == b.edge_count());
  for (int e = 0; e < a.edge_count(); ++e) {
    CHECK(a.edge(e).u == b.edge(e).u);
    CHECK(a.edge(e).v == b.edge(e).v);
  }
  CHECK(a.structural_id() == b.structural_id());
}

TEST_CASE("edge ids are lexicographic and the index is consistent") {
  const Graph g = petersen_graph();
  for (int e = 0; e + 1 < g.edge_count(); ++e) {
    CHECK(g.edge(e) < g.edge(e + 1));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(g.edge_id(g.edge(e).u, g.edge(e).v) == e);
    CHECK(g.edge_id(g.edge(e).v, g.edge(e).u) == e);
  }
  CHECK(g.edge_id(0, 2) == -1);  // outer cycle skips one
}

TEST_CASE("adjacency bitsets agree with the edge list") {
  const Graph g = heawood_graph();
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v) {
      const bool bit = (g.neighbors(u) >> v) & 1;
      CHECK(bit == g.adjacent(u, v));
      CHECK(bit == (g.edge_id(u, v) >= 0));
    }
}

TEST_CASE("component count") {
  CHECK(complete_graph(5).component_count() == 1);
  CHECK(Graph::from_edges(4, {{0, 1}, {2, 3}}).component_count() == 2);
  CHECK(Graph::from_edges(3, {}).component_count() == 3);
}

TEST_CASE("cut returns edges with one endpoint inside") {
  const Graph g = complete_graph(4);
  const EdgeMask cut = g.cut(0b0001);
  CHECK(std::popcount(cut) == 3);
  CHECK(g.cut(0b1111) == 0);
  CHECK(g.cut(0) == 0);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), FormatError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), FormatError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), FormatError);
  CHECK_THROWS_AS(build_named("complete", std::vector<int>{20}), BudgetError);
  CHECK_THROWS_AS(build_named("frobnicator", std::vector<int>{}), UnknownNameError);
  CHECK_THROWS_AS(build_named("cycle", std::vector<int>{2}), DomainError);
  CHECK_THROWS_AS(build_named("complete", std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(parse_graph_spec("K99"), BudgetError);
  CHECK_THROWS_AS(parse_graph_spec(""), UnknownNameError);
}

TEST_CASE("budget errors are explicit, larger budgets admit larger graphs") {
  CHECK_THROWS_AS(build_named("complete", std::vector<int>{17}), BudgetError);
  const SizeBudget wide{32, 64};
  const Graph g = build_named("complete", std::vector<int>{11}, wide);
  CHECK(g.edge_count() == 55);
  // 64-edge capacity is a hard cap regardless of budget
  CHECK_THROWS_AS(build_named("complete", std::vector<int>{12}, SizeBudget{32, 128}),
                  BudgetError);
}

TEST_SUITE_END();
