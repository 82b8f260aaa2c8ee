#include <doctest.h>

#include "ncv/errors.hpp"
#include "ncv/reference.hpp"
#include "ncv/signing.hpp"
#include "test_util.hpp"

using namespace ncv;

namespace {

std::vector<std::pair<int, int>> to_pairs(std::span<const reference::VertexPair> s) {
  return {s.begin(), s.end()};
}

}  // namespace

TEST_SUITE_BEGIN("signing");

TEST_CASE("ncv basics") {
  const Graph k4 = complete_graph(4);
  const CycleCatalog cat = enumerate_cycles(k4);
  CHECK(ncv(cat, make_signing(k4, 1)).counts == std::vector<std::int64_t>{2, 2});
  CHECK(ncv(cat, make_signing(k4, 0)).zero());
  const Graph pet = petersen_graph();
  const CycleCatalog pcat = enumerate_cycles(pet);
  CHECK(ncv(pcat, make_signing(pet, 0)).zero());
}

TEST_CASE("the K6 figure pair has vector (10,18,36,36) and is equivalent") {
  const Graph k6 = complete_graph(6);
  const CycleCatalog cat = enumerate_cycles(k6);
  const auto left = to_pairs(reference::fig_k6_left());
  const auto right = to_pairs(reference::fig_k6_right());
  const Signing a = signing_from_pairs(k6, left);
  const Signing b = signing_from_pairs(k6, right);
  const std::vector<std::int64_t> expected{10, 18, 36, 36};
  CHECK(ncv(cat, a).counts == expected);
  CHECK(ncv(cat, b).counts == expected);
  CHECK(switching_isomorphic(k6, gf2_spaces(k6), a, b, automorphisms(k6)));
}

TEST_CASE("switching: involution, whole-set identity, sign preservation") {
  const Graph g = petersen_graph();
  const CycleCatalog cat = enumerate_cycles(g);
  auto gen = testutil::rng(0x51677);
  const VertexMask everyone = (VertexMask{1} << g.vertex_count()) - 1;
  for (int trial = 0; trial < 50; ++trial) {
    const Signing s = make_signing(g, testutil::random_mask(gen, g));
    const VertexMask x = testutil::random_vertex_set(gen, g);
    CHECK(switched(g, s, everyone).negatives == s.negatives);
    CHECK(switched(g, switched(g, s, x), x).negatives == s.negatives);
    CHECK(ncv(cat, switched(g, s, x)) == ncv(cat, s));
  }
}

TEST_CASE("a one-vertex switch of all-positive K3 stays balanced") {
  const Graph k3 = complete_graph(3);
  const CycleCatalog cat = enumerate_cycles(k3);
  const Signing s = switched(k3, make_signing(k3, 0), VertexMask{1});
  CHECK(std::popcount(s.negatives) == 2);
  CHECK(ncv(cat, s).zero());
  CHECK(is_balanced(cat, s));
}

TEST_CASE("balance, cut space membership, and zero ncv coincide") {
  for (const char* spec : {"K4", "C5", "prism:3", "K3,3", "K5"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const CycleCatalog cat = enumerate_cycles(g);
    const Gf2Spaces spaces = gf2_spaces(g);
    for (EdgeMask mask = 0; mask < (EdgeMask{1} << g.edge_count()); ++mask) {
      const Signing s = make_signing(g, mask);
      const bool balanced = is_balanced(cat, s);
      CHECK(balanced == spaces.in_cut_space(mask));
      CHECK(balanced == ncv(cat, s).zero());
    }
  }
}

TEST_CASE("K3 one negative edge is unbalanced") {
  const Graph k3 = complete_graph(3);
  const CycleCatalog cat = enumerate_cycles(k3);
  CHECK(!is_balanced(cat, make_signing(k3, 1)));
  CHECK(ncv(cat, make_signing(k3, 1)).counts == std::vector<std::int64_t>{1});
}

TEST_CASE("gf2 scaffolding shapes") {
  for (const char* spec : {"K6", "petersen", "heawood", "prism:4"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const Gf2Spaces spaces = gf2_spaces(g);
    CHECK(static_cast<int>(spaces.cycle_basis.size()) ==
          g.edge_count() - g.vertex_count() + g.component_count());
    CHECK(spaces.cut_space_dim == g.vertex_count() - g.component_count());
    const auto ref = testutil::reference_cycles(g);
    for (EdgeMask c : spaces.cycle_basis) {
      const int len = std::popcount(c);
      CHECK(ref.at(len).count(c) == 1);  // each basis element is a cycle
    }
  }
}

TEST_CASE("switching equivalence") {
  const Graph k4 = complete_graph(4);
  const Gf2Spaces spaces = gf2_spaces(k4);
  auto gen = testutil::rng(0xe9);
  for (int trial = 0; trial < 30; ++trial) {
    const Signing s = make_signing(k4, testutil::random_mask(gen, k4));
    CHECK(switching_equivalent(spaces, s,
                               switched(k4, s, testutil::random_vertex_set(gen, k4))));
  }
  // distinct single edges of K4 are never switching equivalent: verified
  // against brute force over all 2^4 switchings
  for (int e1 = 0; e1 < k4.edge_count(); ++e1)
    for (int e2 = 0; e2 < k4.edge_count(); ++e2) {
      const Signing a = make_signing(k4, EdgeMask{1} << e1);
      const Signing b = make_signing(k4, EdgeMask{1} << e2);
      bool brute = false;
      for (VertexMask x = 0; x < 16; ++x)
        brute = brute || switched(k4, a, x).negatives == b.negatives;
      CHECK(switching_equivalent(spaces, a, b) == brute);
      CHECK(switching_equivalent(spaces, a, b) == (e1 == e2));
    }
  // unbalanced vs balanced
  const Graph k3 = complete_graph(3);
  CHECK(!switching_equivalent(gf2_spaces(k3), make_signing(k3, 1), make_signing(k3, 0)));
}

TEST_CASE("switching isomorphism accepts mapped switchings") {
  const Graph g = petersen_graph();
  const Gf2Spaces spaces = gf2_spaces(g);
  const AutomorphismGroup autos = automorphisms(g);
  auto gen = testutil::rng(0x150);
  for (int trial = 0; trial < 20; ++trial) {
    const Signing s = make_signing(g, testutil::random_mask(gen, g));
    const auto& vperm = autos.elements[gen() % autos.order()];
    const auto action = edge_action(g, vperm);
    const Signing t = switched(
        g, Signing{s.graph_id, permute_edges(action, s.negatives)},
        testutil::random_vertex_set(gen, g));
    CHECK(switching_isomorphic(g, spaces, s, t, autos));
  }
}

TEST_CASE("negation") {
  const Graph pet = petersen_graph();
  const CycleCatalog pcat = enumerate_cycles(pet);
  const Signing allneg = negated(pet, make_signing(pet, 0));
  CHECK(ncv(pcat, allneg).counts == std::vector<std::int64_t>{12, 0, 0, 20});
  const Graph k5 = complete_graph(5);
  const CycleCatalog kcat = enumerate_cycles(k5);
  const Signing one = make_signing(k5, 1);
  CHECK(ncv(kcat, negated(k5, one)).counts == std::vector<std::int64_t>{7, 6, 6});
  CHECK(negated(k5, negated(k5, one)).negatives == one.negatives);
}

TEST_CASE("negation parity identity on random signings") {
  for (const char* spec : {"K5", "K6", "petersen"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const CycleCatalog cat = enumerate_cycles(g);
    auto gen = testutil::rng(0xbeef);
    for (int trial = 0; trial < 60; ++trial) {
      const Signing s = make_signing(g, testutil::random_mask(gen, g));
      const NegCycleVector v = ncv(cat, s);
      const NegCycleVector w = ncv(cat, negated(g, s));
      for (std::size_t i = 0; i < v.lengths.size(); ++i) {
        const int l = v.lengths[i];
        if (l % 2)
          CHECK(w.counts[i] == cat.count(l) - v.counts[i]);
        else
          CHECK(w.counts[i] == v.counts[i]);
      }
    }
  }
}

TEST_CASE("class representatives: count, forest positivity, unique coverage") {
  const Graph k4 = complete_graph(4);
  CHECK(class_representatives(k4).size() == 8);
  const Graph tree = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(class_representatives(tree).size() == 1);

  for (const char* spec : {"K4", "C5", "prism:3", "K3,3"}) {
    CAPTURE(spec);
    const Graph g = parse_graph_spec(spec);
    const SwitchingClassReps reps(g);
    const Gf2Spaces spaces = reps.spaces();
    for (std::uint64_t i = 0; i < reps.size(); ++i)
      CHECK((reps.mask_at(i) & spaces.forest) == 0);
    auto gen = testutil::rng(0xcafe);
    for (int trial = 0; trial < 40; ++trial) {
      const EdgeMask n = testutil::random_mask(gen, g);
      int equivalent = 0;
      std::uint64_t found = 0;
      for (std::uint64_t i = 0; i < reps.size(); ++i)
        if (switching_equivalent(spaces, make_signing(g, n), reps.at(i))) {
          ++equivalent;
          found = i;
        }
      CHECK(equivalent == 1);
      CHECK(reps.index_of(n) == found);
      CHECK(reps.project(n) == reps.mask_at(found));
    }
  }
}

TEST_CASE("stream order is ascending by mask") {
  const SwitchingClassReps reps(complete_graph(5));
  for (std::uint64_t i = 0; i + 1 < reps.size(); ++i)
    CHECK(reps.mask_at(i) < reps.mask_at(i + 1));
}

TEST_CASE("graph mismatch is rejected") {
  const Graph k4 = complete_graph(4);
  const Graph k5 = complete_graph(5);
  const CycleCatalog cat = enumerate_cycles(k4);
  const Signing s = make_signing(k5, 1);
  CHECK_THROWS_AS(ncv(cat, s), GraphMismatchError);
  CHECK_THROWS_AS(switched(k4, s, 1), GraphMismatchError);
  CHECK_THROWS_AS(make_signing(k4, EdgeMask{1} << 20), GraphMismatchError);
}

TEST_SUITE_END();
