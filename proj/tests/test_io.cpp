#include <doctest.h>

#include <random>

#include "tinlab/errors.hpp"
#include "tinlab/io.hpp"
#include "tinlab/testlab.hpp"

using namespace tinlab;

TEST_CASE("graph files") {
  Graph p3 = io::parse_graph("c a path\np tw 3 2\n1 2\n2 3\n");
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(io::write_graph(p3) == "p tw 3 2\n1 2\n2 3\n");
  CHECK(io::parse_graph("p tw 3 2\n3 2\n2 1\n") == p3);
  CHECK(io::write_graph(io::parse_graph("p tw 3 2\n3 2\n2 1\n")) == io::write_graph(p3));
  CHECK_THROWS_AS(io::parse_graph(""), ParseError);
  CHECK_THROWS_AS(io::parse_graph("p tw 3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("p tw 3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("p tw 3 2\n1 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("p tw 3 2\n1 2\n"), ParseError);
  try {
    io::parse_graph("p tw 3 2\n1 2\nc note\n2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("weight sidecar") {
  auto w = io::parse_weights("1 1.5\n2 3\n3 7/4\n", 3);
  CHECK(w == std::vector<Weight>{Weight(3) / 2, 3, Weight(7) / 4});
  Graph g = io::parse_graph("p tw 3 0\n").with_weights(w);
  CHECK(io::parse_weights(io::write_weights(g), 3) == w);
  CHECK_THROWS_AS(io::parse_weights("1 1\n", 2), ParseError);
  CHECK_THROWS_AS(io::parse_weights("1 1\n1 2\n", 1), ParseError);
  CHECK_THROWS_AS(io::parse_weights("1 -2\n", 1), ParseError);
}

TEST_CASE("decomposition files") {
  auto td = io::parse_td("s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n", 4);
  CHECK(td.nodes == 2);
  CHECK(td.bags == std::vector<VertexSet>{{0, 1, 2}, {0, 2, 3}});
  CHECK(td.tree_edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(io::write_td(td, 4) == "s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n");
  CHECK_THROWS_AS(io::parse_td("s td 2 3 4\nb 1 1 2 3\nb 1 1 3 4\n1 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_td("s td 2 3 4\nb 1 1 2 3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_td("s td 1 1 4\nb 1 5\n"), ParseError);
  CHECK_THROWS_AS(io::parse_td("s td 1 1 4\nb 1 1\n", 5), ParseError);
  CHECK_THROWS_AS(io::parse_td("s td 1 2 4\nb 1 1 1\n"), ParseError);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto inst = testlab::random_instance(12, 0.3, rng);
    auto text = io::write_td(inst.td, 12);
    CHECK(io::write_td(io::parse_td(text, 12), 12) == text);
    auto gtext = io::write_graph(inst.graph);
    CHECK(io::parse_graph(gtext) == inst.graph);
  }
}

TEST_CASE("family files") {
  Graph p3 = io::parse_graph("p tw 3 2\n1 2\n2 3\n");
  auto fam = io::parse_family("f 1\nh 1.5: 2 3\n", p3);
  CHECK(fam.members == std::vector<VertexSet>{{1, 2}});
  CHECK(fam.member_weights == std::vector<Weight>{Weight(3) / 2});
  CHECK(io::write_family(fam) == "f 1\nh 1.5: 2 3\n");
  CHECK(io::parse_family("f 1\nh 2 : 1\n", p3).member_weights[0] == 2);
  CHECK_THROWS_AS(io::parse_family("f 1\nh 1: 1 3\n", p3), ParseError);
  CHECK_THROWS_AS(io::parse_family("f 1\nh 1 1 3\n", p3), ParseError);
  CHECK_THROWS_AS(io::parse_family("f 2\nh 1: 1\n", p3), ParseError);
  CHECK_THROWS_AS(io::parse_family("f 1\nh 1:\n", p3), ParseError);
}

TEST_CASE("lists and vertex sets") {
  auto lists = io::parse_lists("1 1 2\n3 3\n", 3);
  CHECK(lists == std::vector<std::vector<int>>{{0, 1}, {}, {2}});
  CHECK_THROWS_AS(io::parse_lists("1 0\n", 3), ParseError);
  CHECK(io::parse_vertex_set("x 3 1\n", 3) == VertexSet{0, 2});
  CHECK(io::write_vertex_set({0, 2}) == "x 1 3\n");
}

TEST_CASE("sha-256") {
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
