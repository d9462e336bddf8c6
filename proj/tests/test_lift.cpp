#include <doctest.h>

#include <random>

#include "tinlab/errors.hpp"
#include "tinlab/lift.hpp"
#include "tinlab/testlab.hpp"

using namespace tinlab;

namespace {

Graph path(int n) { return testlab::gen_path(n).graph; }

TreeDecomposition c4_td() {
  TreeDecomposition td;
  td.nodes = 2;
  td.bags = {{0, 1, 2}, {0, 2, 3}};
  td.tree_edges = {{0, 1}};
  return td;
}

}  // namespace

TEST_CASE("blow-up graphs") {
  auto c5 = testlab::gen_cycle(5).graph;
  CHECK(blowup_graph(singleton_family(c5)).edges() == c5.edges());

  SubgraphFamily edges = edge_family(path(4));
  CHECK(edges.members == std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(edges.member_weights == std::vector<Weight>{2, 2, 2});
  std::vector<Edge> k3{{0, 1}, {0, 2}, {1, 2}};
  CHECK(blowup_graph(edges).edges() == k3);

  std::vector<Edge> two{{0, 1}, {2, 3}};
  SubgraphFamily apart{Graph(4, two), {{0, 1}, {2, 3}}, {1, 1}};
  CHECK(blowup_graph(apart).size() == 0);
}

TEST_CASE("family validation") {
  SubgraphFamily disconnected{path(4), {{0, 2}}, {1}};
  CHECK_THROWS_AS(require_valid(disconnected), InputError);
  SubgraphFamily empty_member{path(4), {{}}, {1}};
  CHECK_THROWS_AS(require_valid(empty_member), InputError);
  SubgraphFamily bad_weights{path(4), {{0}}, {}};
  CHECK_THROWS_AS(require_valid(bad_weights), InputError);
}

TEST_CASE("lifted decompositions") {
  auto c4 = testlab::gen_cycle(4).graph;
  SubgraphFamily singles = singleton_family(c4);
  CHECK(lift_decomposition(singles, c4_td()).bags == c4_td().bags);

  SubgraphFamily ac{c4, {{0}, {2}}, {1, 1}};
  TreeDecomposition lifted = lift_decomposition(ac, c4_td());
  CHECK(lifted.bags == std::vector<VertexSet>{{0, 1}, {0, 1}});
  Graph blow = blowup_graph(ac);
  CHECK(validate(blow, lifted).ok());
  CHECK(independence_number(blow, lifted) == 2);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    auto inst = testlab::gen_random_chordal(3 + i % 15, 0.5, rng());
    auto fam = testlab::random_family(inst.graph, 12, 4, rng);
    TreeDecomposition t = lift_decomposition(fam, inst.td);
    Graph b = blowup_graph(fam);
    CHECK(validate(b, t).ok());
    CHECK(independence_number(b, t) <= 1);
  }
}

TEST_CASE("ball families") {
  SubgraphFamily balls = ball_family(path(3), 1);
  CHECK(balls.members == std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {1, 2}});
  std::vector<Edge> two{{0, 1}, {1, 2}, {3, 4}};
  SubgraphFamily wide = ball_family(Graph(5, two), 6);
  CHECK(wide.members == std::vector<VertexSet>{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {3, 4}, {3, 4}});
  CHECK(ball_family(Graph(1, {}), 1).members == std::vector<VertexSet>{{0}});
  CHECK_THROWS_AS(ball_family(path(3), 0), InputError);
}

TEST_CASE("power identity") {
  CHECK(verify_power_identity(path(5), 1, 1));
  std::vector<Edge> parts{{0, 1}, {1, 2}, {3, 4}, {5, 6}, {6, 7}, {7, 8}};
  CHECK(verify_power_identity(Graph(9, parts), 2, 2));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    Graph g = testlab::random_graph(1 + i, 0.1, rng);
    for (int k = 1; k <= 3; ++k)
      for (int d = 1; d <= 2; ++d) CHECK(verify_power_identity(g, k, d));
  }
}

TEST_CASE("odd powers with decompositions") {
  auto c4 = testlab::gen_cycle(4).graph;
  auto [g1, t1] = power_with_decomposition(c4, c4_td(), 1);
  CHECK(g1 == c4);
  CHECK(t1.bags == c4_td().bags);
  CHECK_THROWS_AS(power_with_decomposition(c4, c4_td(), 2), InputError);

  auto chordal = testlab::gen_random_chordal(20, 0.4, 77);
  auto [g3, t3] = power_with_decomposition(chordal.graph, chordal.td, 3);
  CHECK(g3 == power(chordal.graph, 3));
  CHECK(is_chordal(g3).chordal);
  CHECK(independence_number(g3, t3) <= 1);

  auto c7 = testlab::gen_cycle(7);
  auto [g7, t7] = power_with_decomposition(c7.graph, c7.td, 3);
  CHECK(validate(g7, t7).ok());
  CHECK(independence_number(g7, t7) <= independence_number(c7.graph, c7.td));
}
