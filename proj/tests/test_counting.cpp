#include <doctest.h>

#include "ncv/counting.hpp"
#include "ncv/errors.hpp"
#include "test_util.hpp"

using namespace ncv;

namespace {

EdgeMask mask_of(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
  EdgeMask m = 0;
  for (auto [u, v] : pairs) m |= EdgeMask{1} << g.edge_id(u, v);
  return m;
}

MatchingAnalysis analyze_max_matching(const Graph& g, const CycleCatalog& cat,
                                      const AutomorphismGroup& autos, int m) {
  EdgeMask mask = 0;
  for (int i = 0; i + 1 < 2 * m; i += 2) mask |= EdgeMask{1} << g.edge_id(i, i + 1);
  return analyze_matching(g, cat, matching_from_mask(g, mask), autos);
}

// p_l(s) evaluated from the G table alone; also valid beyond s = m, which
// the production accessor deliberately rejects.
Int p_from_table(const MatchingAnalysis& analysis, int l, long s) {
  Int sum = 0;
  const auto it = analysis.G.find(l);
  if (it == analysis.G.end()) return sum;
  for (int k = 1; k <= analysis.m(); ++k) {
    Int term = binomial(s, k) * Int(it->second[static_cast<std::size_t>(k - 1)]);
    for (int i = 1; i < k; ++i) term *= -2;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_SUITE_BEGIN("counting");

TEST_CASE("g_count basics on K4") {
  const Graph g = complete_graph(4);
  const CycleCatalog cat = enumerate_cycles(g);
  CHECK(g_count(cat, mask_of(g, {{0, 1}}), 3) == 2);
  CHECK(g_count(cat, mask_of(g, {{0, 1}, {2, 3}}), 4) == 2);
  for (int l : cat.spectrum) CHECK(g_count(cat, 0, l) == cat.count(l));
  CHECK(g_count(cat, 0, 7) == 0);
}

TEST_CASE("f_count on K4 with a perfect matching negative") {
  const Graph g = complete_graph(4);
  const CycleCatalog cat = enumerate_cycles(g);
  const EdgeMask n = mask_of(g, {{0, 1}, {2, 3}});
  CHECK(f_count(cat, n, mask_of(g, {{0, 1}}), 4) == 0);
  CHECK(f_count(cat, n, n, 4) == 2);
  CHECK(f_count(cat, 0, 0, 3) == cat.count(3));
  CHECK_THROWS_AS(f_count(cat, n, mask_of(g, {{0, 2}}), 4), DomainError);
}

TEST_CASE("direct and alternating-sum f agree; zeta reconstruction returns g") {
  for (const char* spec : {"K5", "K6", "petersen"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const CycleCatalog cat = enumerate_cycles(g);
    auto gen = testutil::rng(0xf0f0);
    for (int trial = 0; trial < 8; ++trial) {
      EdgeMask n = testutil::random_mask(gen, g);
      while (std::popcount(n) > 7) n &= n - 1;
      for (int l : cat.spectrum) {
        EdgeMask x = n;
        while (true) {  // all subsets X of N
          CHECK(f_count(cat, n, x, l) == f_count_mobius(cat, n, x, l));
          Int total = 0;
          EdgeMask rest = n & ~x;
          EdgeMask s = rest;
          while (true) {  // zeta: g(X) = sum of f over supersets
            total += f_count(cat, n, x | s, l);
            if (s == 0) break;
            s = (s - 1) & rest;
          }
          CHECK(Int(g_count(cat, x, l)) == total);
          if (x == 0) break;
          x = (x - 1) & n;
        }
      }
    }
  }
}

TEST_CASE("inclusion-exclusion ncv equals direct ncv") {
  const Graph k4 = complete_graph(4);
  const CycleCatalog c4 = enumerate_cycles(k4);
  const Signing pm = make_signing(k4, mask_of(k4, {{0, 1}, {2, 3}}));
  CHECK(ncv_inclusion_exclusion(c4, pm).counts == std::vector<std::int64_t>{4, 0});

  const Graph k5 = complete_graph(5);
  const CycleCatalog c5 = enumerate_cycles(k5);
  const Signing two = make_signing(k5, mask_of(k5, {{0, 1}, {2, 3}}));
  CHECK(ncv_inclusion_exclusion(c5, two).counts == std::vector<std::int64_t>{6, 8, 4});

  for (const char* spec : {"K5", "K6", "petersen", "prism:3"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const CycleCatalog cat = enumerate_cycles(g);
    auto gen = testutil::rng(0x1e11);
    for (int trial = 0; trial < 60; ++trial) {
      const Signing s = make_signing(g, testutil::random_mask(gen, g));
      CHECK(ncv_inclusion_exclusion(cat, s) == ncv(cat, s));
    }
    // single negative edge: one term, equals g_count
    for (int e = 0; e < g.edge_count(); ++e) {
      const Signing s = make_signing(g, EdgeMask{1} << e);
      const NegCycleVector v = ncv_inclusion_exclusion(cat, s);
      for (std::size_t i = 0; i < v.lengths.size(); ++i)
        CHECK(v.counts[i] == g_count(cat, s.negatives, v.lengths[i]));
    }
  }
}

TEST_CASE("inclusion-exclusion subset budget") {
  const Graph g = complete_graph(6);
  const CycleCatalog cat = enumerate_cycles(g);
  const Signing s = make_signing(g, g.all_edges());  // 15 negative edges
  CHECK_THROWS_AS(ncv_inclusion_exclusion(cat, s, 10), BudgetError);
  CHECK(ncv_inclusion_exclusion(cat, s, 15) == ncv(cat, s));
}

TEST_CASE("analyze_matching rejects non-permutable input") {
  const Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  const CycleCatalog cat = enumerate_cycles(paw);
  const AutomorphismGroup autos = automorphisms(paw);
  const EdgeMask mask = mask_of(paw, {{0, 3}, {1, 2}});
  CHECK_THROWS_AS(analyze_matching(paw, cat, matching_from_mask(paw, mask), autos),
                  DomainError);
}

TEST_CASE("petersen kind-1 profile") {
  const Graph g = petersen_graph();
  const CycleCatalog cat = enumerate_cycles(g);
  const AutomorphismGroup autos = automorphisms(g);
  const auto kinds = find_permutable_matchings(g, 3, autos);
  REQUIRE(kinds.size() == 2);
  // the alternate-hexagon kind is the one with mu(6) = 3
  for (const Matching& mat : kinds) {
    const MatchingAnalysis a = analyze_matching(g, cat, mat, autos);
    if (a.mu.at(6) == 3) {
      CHECK(a.mu.at(5) == 2);
      CHECK(a.mu.at(8) == 2);
      CHECK(a.mu.at(9) == 3);
      CHECK(a.delta_odd == std::set<int>{2, 3});
      CHECK(a.delta_even == std::set<int>{2, 3});
    }
  }
}

TEST_CASE("heawood kind profiles") {
  const Graph g = heawood_graph();
  const CycleCatalog cat = enumerate_cycles(g);
  const AutomorphismGroup autos = automorphisms(g);
  const auto kinds = find_permutable_matchings(g, 3, autos);
  REQUIRE(kinds.size() == 3);
  int with_mu6_3 = 0;
  for (const Matching& mat : kinds) {
    const MatchingAnalysis a = analyze_matching(g, cat, mat, autos);
    CHECK(a.mu.at(8) == 2);
    CHECK(a.mu.at(10) == 3);
    CHECK(a.mu.at(12) == 3);
    CHECK(a.mu.at(14) == 3);
    if (a.mu.at(6) == 3)
      ++with_mu6_3;
    else
      CHECK(a.mu.at(6) == 2);
  }
  CHECK(with_mu6_3 == 1);
}

TEST_CASE("K6 hexagons through a perfect matching") {
  const Graph g = complete_graph(6);
  const CycleCatalog cat = enumerate_cycles(g);
  const AutomorphismGroup autos = automorphisms(g);
  const MatchingAnalysis a = analyze_max_matching(g, cat, autos, 3);
  CHECK(a.G.at(6)[2] == 8);
  // cross-check the closed shape (l-k-1)! 2^{k-1} at k = 3, l = 6
  CHECK(a.G.at(6)[2] == 2 * 4);
}

TEST_CASE("mu equals d where defined; mu 0 means no d entry") {
  for (const char* spec : {"K6", "K7", "petersen", "heawood", "matching_join_kbar:3"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const CycleCatalog cat = enumerate_cycles(g);
    const AutomorphismGroup autos = automorphisms(g);
    for (int m = g.vertex_count() / 2; m >= 1; --m) {
      for (const Matching& mat : find_permutable_matchings(g, m, autos)) {
        const MatchingAnalysis a = analyze_matching(g, cat, mat, autos);
        for (int l : a.spectrum) {
          if (a.mu.at(l) == 0) {
            CHECK(a.d.count(l) == 0);
            CHECK(a.alpha.count(l) == 0);
          } else {
            REQUIRE(a.d.count(l) == 1);
            CHECK(a.d.at(l) == a.mu.at(l));
          }
        }
      }
    }
  }
}

TEST_CASE("pendant matching leaves the triangle length untouched") {
  const Graph g = matching_join_kbar(3);
  const CycleCatalog cat = enumerate_cycles(g);
  REQUIRE(cat.spectrum == std::vector<int>{3});
  const AutomorphismGroup autos = automorphisms(g);
  const Matching pendant = matching_from_mask(g, EdgeMask{1} << g.edge_id(0, 3));
  const MatchingAnalysis a = analyze_matching(g, cat, pendant, autos);
  CHECK(a.mu.at(3) == 0);
  CHECK(a.d.empty());
  CHECK(a.G.at(3) == std::vector<std::int64_t>{0});
}

TEST_CASE("p_poly pinned examples") {
  const Graph k5 = complete_graph(5);
  const CycleCatalog c5 = enumerate_cycles(k5);
  const AutomorphismGroup a5 = automorphisms(k5);
  const MatchingAnalysis an5 = analyze_max_matching(k5, c5, a5, 2);
  CHECK(p_poly(an5, 5, 2) == 4);
  CHECK(p_poly(an5, 3, 0) == 0);
  CHECK(p_poly(an5, 4, 0) == 0);

  // c_3^-(s) = s(n-2): 3 negative disjoint edges in K6 give 12 triangles
  const Graph k6 = complete_graph(6);
  const CycleCatalog c6 = enumerate_cycles(k6);
  const MatchingAnalysis an6 = analyze_max_matching(k6, c6, automorphisms(k6), 3);
  CHECK(p_poly(an6, 3, 3) == 12);
  CHECK(p_poly(an6, 3, 1) == 4);
  CHECK_THROWS_AS(p_poly(an6, 3, 4), DomainError);
  CHECK_THROWS_AS(p_poly(an6, 3, -1), DomainError);
}

TEST_CASE("p_poly equals the direct count for every submatching size") {
  for (const char* spec :
       {"K4", "K5", "K6", "K7", "K2,2", "K3,3", "K3,4", "K4,4", "petersen", "heawood"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const CycleCatalog cat = enumerate_cycles(g);
    const AutomorphismGroup autos = automorphisms(g);
    for (int m = g.vertex_count() / 2; m >= 1; --m) {
      const auto kinds = find_permutable_matchings(g, m, autos);
      if (kinds.empty()) continue;
      for (const Matching& mat : kinds) {
        const MatchingAnalysis a = analyze_matching(g, cat, mat, autos);
        std::vector<int> ids;
        EdgeMask rest = mat.edges;
        while (rest) {
          ids.push_back(std::countr_zero(rest));
          rest &= rest - 1;
        }
        for (int s = 0; s <= m; ++s) {
          EdgeMask sub = 0;
          for (int i = 0; i < s; ++i) sub |= EdgeMask{1} << ids[static_cast<std::size_t>(i)];
          const NegCycleVector direct = ncv(cat, make_signing(g, sub));
          for (std::size_t i = 0; i < direct.lengths.size(); ++i)
            CHECK(p_poly(a, direct.lengths[i], s) == direct.counts[i]);
        }
      }
      break;  // largest m with kinds is enough here
    }
  }
}

TEST_CASE("finite differences: degree d_l and leading coefficient") {
  const Graph g = complete_graph(7);
  const CycleCatalog cat = enumerate_cycles(g);
  const AutomorphismGroup autos = automorphisms(g);
  const MatchingAnalysis a = analyze_max_matching(g, cat, autos, 3);
  for (int l : a.spectrum) {
    REQUIRE(a.d.count(l) == 1);
    const int d = a.d.at(l);
    // forward differences over enough sample points
    std::vector<Int> values;
    for (long s = 0; s <= d + 3; ++s) values.push_back(p_from_table(a, l, s));
    for (int order = 1; order <= d + 1; ++order)
      for (std::size_t i = 0; i + 1 < values.size(); ++i)
        values[i] = values[i + 1] - values[i];
    // after d+1 rounds every entry of Delta^{d+1} is zero
    for (std::size_t i = 0; i + static_cast<std::size_t>(d) + 1 < values.size(); ++i)
      CHECK(values[i] == 0);
    // and Delta^d is the constant d! alpha_l
    std::vector<Int> again;
    for (long s = 0; s <= d + 3; ++s) again.push_back(p_from_table(a, l, s));
    for (int order = 1; order <= d; ++order)
      for (std::size_t i = 0; i + 1 < again.size(); ++i) again[i] = again[i + 1] - again[i];
    const Rat expected = a.alpha.at(l) * Rat(factorial(d));
    CHECK(expected.get_den() == 1);
    CHECK(again[0] == expected.get_num());
    CHECK(again[1] == expected.get_num());
  }
}

TEST_SUITE_END();
