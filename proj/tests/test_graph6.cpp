#include <doctest.h>

#include "ncv/errors.hpp"
#include "ncv/graph6.hpp"
#include "test_util.hpp"

using namespace ncv;

TEST_SUITE_BEGIN("graph6");

TEST_CASE("single vertex") {
  const Graph g = parse_graph6("@");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(encode_graph6(g) == "@");
}

TEST_CASE("known encodings") {
  // K_4 is 'C~': 6 upper-triangle bits all set.
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.edge_count() == 6);
  // P_4 path 0-1-2-3
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(parse_graph6(encode_graph6(p4)).structural_id() == p4.structural_id());
}

TEST_CASE("encoder matches an independently written reference encoder") {
  auto gen = testutil::rng(0xabcdef12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 10);
    const Graph g = testutil::random_graph(gen, n, 0.45);
    CHECK(encode_graph6(g) == testutil::reference_graph6(g));
  }
}

TEST_CASE("parse then encode is the identity on 1000 random graphs") {
  auto gen = testutil::rng(0x5eed);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 11);
    const Graph g = testutil::random_graph(gen, n, 0.4);
    const std::string text = encode_graph6(g);
    const Graph back = parse_graph6(text);
    REQUIRE(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edge_count() == g.edge_count());
    CHECK(back.structural_id() == g.structural_id());
    CHECK(encode_graph6(back) == text);
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("\x01"), FormatError);          // header below range
  CHECK_THROWS_AS(parse_graph6("~???"), FormatError);          // long form unsupported
  const std::string k5 = encode_graph6(complete_graph(5));
  CHECK_THROWS_AS(parse_graph6(k5.substr(0, k5.size() - 1)), FormatError);  // truncated
  CHECK_THROWS_AS(parse_graph6(k5 + "?"), FormatError);                     // too long
  // n=2, body with a padding bit set: 'A' header needs 1 body char; bit 0
  // is the only real bit, the rest must be zero padding.
  CHECK_THROWS_AS(parse_graph6("A?\x7f"), FormatError);
  CHECK_THROWS_AS(parse_graph6(std::string("A") + static_cast<char>(63 + 1)), FormatError);
}

TEST_SUITE_END();
