#include <doctest.h>

#include <random>

#include "tinlab/errors.hpp"
#include "tinlab/graph.hpp"
#include "tinlab/testlab.hpp"

using namespace tinlab;

namespace {

Graph path(int n) { return testlab::gen_path(n).graph; }
Graph cycle(int n) { return testlab::gen_cycle(n).graph; }

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("weights parse exactly and print canonically") {
  CHECK(parse_weight("3") == Weight(3));
  CHECK(parse_weight("1.25") == Weight(5) / 4);
  CHECK(parse_weight(".5") == Weight(1) / 2);
  CHECK(parse_weight("7/4") == Weight(7) / 4);
  CHECK(parse_weight("0.1") + parse_weight("0.2") == parse_weight("0.3"));
  CHECK_THROWS_AS(parse_weight("-1"), InputError);
  CHECK_THROWS_AS(parse_weight("1.2.3"), InputError);
  CHECK_THROWS_AS(parse_weight(""), InputError);
  CHECK_THROWS_AS(parse_weight("1/0"), InputError);
  CHECK(format_weight(Weight(3)) == "3");
  CHECK(format_weight(Weight(5) / 4) == "1.25");
  CHECK(format_weight(Weight(1) / 3) == "1/3");
  for (const char* s : {"0", "2.5", "1/3", "22/7", "0.0625"}) CHECK(parse_weight(format_weight(parse_weight(s))) == parse_weight(s));
}

TEST_CASE("graph construction rejects malformed input") {
  std::vector<Edge> loop{{0, 0}};
  std::vector<Edge> twice{{0, 1}, {1, 0}};
  std::vector<Edge> range{{0, 5}};
  CHECK_THROWS_AS(Graph(2, loop), InputError);
  CHECK_THROWS_AS(Graph(2, twice), InputError);
  CHECK_THROWS_AS(Graph(2, range), InputError);
  CHECK_THROWS_AS(Graph::from_adjacency({{1}, {}}), InputError);
  Graph g = Graph::from_adjacency({{1, 1}, {0}});
  CHECK(g.size() == 1);
  CHECK(!g.weighted());
  CHECK(g.weight(0) == 1);
}

TEST_CASE("bfs distances") {
  auto row = bfs_distances(path(3), 0);
  CHECK(row.dist == std::vector<std::optional<int>>{0, 1, 2});
  CHECK(bfs_distances(Graph(1, {}), 0).dist == std::vector<std::optional<int>>{0});
  std::vector<Edge> two{{0, 1}, {2, 3}};
  auto split = bfs_distances(Graph(4, two), 0);
  CHECK(split.dist == std::vector<std::optional<int>>{0, 1, std::nullopt, std::nullopt});
  CHECK(!split.reachable(2));
  CHECK(split.within(1, 1));
}

TEST_CASE("graph powers") {
  Graph g = cycle(5);
  CHECK(power(g, 1) == g);
  CHECK(power(cycle(6), 3).edges() == complete(6).edges());
  std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(power(path(4), 2).edges() == expected);
  CHECK_THROWS_AS(power(g, 0), InputError);
}

TEST_CASE("induced subgraphs") {
  VertexSet three{0, 1, 2};
  CHECK(induced(complete(4), three).graph.edges() == complete(3).edges());
  CHECK(induced(cycle(5), VertexSet{}).graph.empty());
  VertexSet four{1, 2, 3, 4};
  auto sub = induced(cycle(5), four);
  CHECK(sub.graph.edges() == path(4).edges());
  CHECK(sub.to_host == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("chordality with certificates") {
  auto c4 = is_chordal(cycle(4));
  CHECK(!c4.chordal);
  CHECK(c4.cycle.size() == 4);
  auto tree = is_chordal(path(7));
  CHECK(tree.chordal);
  CHECK(is_perfect_elimination_order(path(7), tree.elimination_order));
  CHECK(is_chordal(testlab::gen_split(4, 6, 0.5, 3).graph).chordal);
  CHECK(is_chordal(Graph()).chordal);
}

TEST_CASE("induced-cycle certificates are chordless cycles") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = testlab::random_graph(9, 0.35, rng);
    auto res = is_chordal(g);
    CHECK(res.chordal == testlab::brute_is_chordal(g));
    if (res.chordal) {
      CHECK(is_perfect_elimination_order(g, res.elimination_order));
      continue;
    }
    const auto& c = res.cycle;
    REQUIRE(c.size() >= 4);
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        bool consecutive = b == a + 1 || (a == 0 && b == c.size() - 1);
        CHECK(g.adjacent(c[a], c[b]) == consecutive);
      }
    }
  }
}

TEST_CASE("connected components") {
  Graph p3 = path(3);
  VertexSet ends{0, 2};
  CHECK(connected_components(p3, ends) == std::vector<VertexSet>{{0}, {2}});
  VertexSet all{0, 1, 2};
  CHECK(connected_components(p3, all) == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(connected_components(p3, VertexSet{}).empty());
  CHECK(is_connected_subset(p3, all));
  CHECK(!is_connected_subset(p3, ends));
}
