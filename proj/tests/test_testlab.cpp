#include <doctest.h>

#include <cstdlib>
#include <random>

#include "tinlab/errors.hpp"
#include "tinlab/testlab.hpp"

using namespace tinlab;
namespace tl = tinlab::testlab;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("induced-subgraph oracle values") {
  Graph c5 = tl::gen_cycle(5).graph;
  CHECK(tl::brute_best_induced(c5, tl::parse_property("bipartite"), 2).optimum == 4);
  CHECK(tl::brute_best_induced(complete(4), tl::parse_property("forest"), 2).optimum == 2);
  CHECK(tl::brute_best_induced(c5, tl::parse_property("mwis"), 1).optimum == 2);
  CHECK(tl::brute_best_induced(complete(4), tl::parse_property("color:3"), 3).optimum == 3);
  auto lists = std::vector<std::vector<int>>{{0}, {0}, {0}};
  CHECK(tl::brute_best_induced(complete(3), tl::parse_property("listcolor:3", lists), 3).optimum == 1);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 40; ++i) {
    Graph g = tl::random_graph(10, 0.3, rng);
    VertexSet all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    auto best = tl::brute_best_induced(g, tl::parse_property("mwis"), 1);
    CHECK(best.optimum == tl::brute_alpha(g, all));
    CHECK(best.exhaustive);
  }
}

TEST_CASE("packing oracle values") {
  auto p4 = tl::gen_path(4).graph;
  SubgraphFamily edges{p4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1}};
  CHECK(tl::brute_packing(edges, 2).optimum == 1);
  auto p8 = tl::gen_path(8).graph;
  SubgraphFamily singles{p8, {}, {}};
  for (Vertex v = 0; v < 8; ++v) {
    singles.members.push_back({v});
    singles.member_weights.emplace_back(1);
  }
  CHECK(tl::brute_packing(singles, 4).optimum == 2);
  CHECK(tl::brute_packing(SubgraphFamily{p8, {}, {}}, 2).optimum == 0);
  CHECK(tl::verify_packing(singles, {0, 4}, 4));
  CHECK(!tl::verify_packing(singles, {0, 3}, 4));
  CHECK(!tl::verify_packing(singles, {0, 0}, 4));
}

TEST_CASE("exact tree-independence number") {
  CHECK(tl::exact_tin_small(complete(3)) == 1);
  CHECK(tl::exact_tin_small(tl::gen_cycle(4).graph) == 2);
  CHECK(tl::exact_tin_small(Graph()) == 0);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 60; ++i) {
    auto chordal = tl::gen_random_chordal(1 + i % 8, 0.5, rng());
    CHECK(tl::exact_tin_small(chordal.graph) == 1);
    auto inst = tl::random_instance(1 + i % 8, 0.4, rng);
    const int tin = tl::exact_tin_small(inst.graph);
    CHECK(tin <= independence_number(inst.graph, inst.td));
    CHECK((tin <= 1) == is_chordal(inst.graph).chordal);
  }
  CHECK_THROWS_AS(tl::exact_tin_small(tl::gen_path(9).graph), GuardError);
}

TEST_CASE("tree-independence number grows along K_{n,n} counterexamples") {
  int previous = 0;
  for (int n = 1; n <= 3; ++n) {
    Graph h = tl::gen_kab(n, n).graph;
    auto ce = tl::gen_forked_power_counterexample(h, 2);
    Graph restricted = induced(power(ce.graph, 2), ce.x).graph;
    const int tin = tl::exact_tin_small(restricted);
    CHECK(tin >= previous);
    previous = tin;
  }
  CHECK(previous >= 2);
}

TEST_CASE("chordal generator") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = tl::gen_random_chordal(20, 0.4, seed);
    CHECK(is_chordal(inst.graph).chordal);
    CHECK(validate(inst.graph, inst.td).ok());
    CHECK(independence_number(inst.graph, inst.td) == 1);
  }
  auto full = tl::gen_random_chordal(7, 1.0, 3);
  CHECK(full.graph.size() == 21);
  CHECK(full.td.nodes == 1);
  auto sparse = tl::gen_random_chordal(7, 0.0, 3);
  CHECK(sparse.graph.size() == 0);
  CHECK(sparse.td.nodes == 7);
  CHECK(validate(sparse.graph, sparse.td).ok());
  CHECK(independence_number(sparse.graph, sparse.td) == 1);
  CHECK(tl::gen_random_chordal(5, 0.5, 9).graph == tl::gen_random_chordal(5, 0.5, 9).graph);
}

TEST_CASE("small generators") {
  for (auto inst : {tl::gen_split(4, 5, 0.5, 2), tl::gen_kab(2, 3), tl::gen_path(1), tl::gen_path(6), tl::gen_cycle(3),
                    tl::gen_cycle(7)}) {
    CHECK(validate(inst.graph, inst.td).ok());
  }
  CHECK(independence_number(tl::gen_split(4, 5, 0.5, 2).graph, tl::gen_split(4, 5, 0.5, 2).td) == 1);
  auto c7 = tl::gen_cycle(7);
  CHECK(independence_number(c7.graph, c7.td) == 2);
  CHECK_THROWS_AS(tl::gen_cycle(2), InputError);
}

TEST_CASE("even-power counterexample construction") {
  Graph c4 = tl::gen_cycle(4).graph;
  auto ce = tl::gen_forked_power_counterexample(c4, 2);
  CHECK(ce.graph.order() == 8);
  CHECK(ce.x == VertexSet{0, 1, 2, 3});
  CHECK(is_chordal(ce.graph).chordal);
  CHECK(tl::is_isomorphic_small(induced(power(ce.graph, 2), ce.x).graph, c4));

  Graph c5 = tl::gen_cycle(5).graph;
  auto ce4 = tl::gen_forked_power_counterexample(c5, 4);
  CHECK(ce4.graph.order() == 5 + 5 + 5);
  CHECK(tl::is_isomorphic_small(induced(power(ce4.graph, 4), ce4.x).graph, c5));

  auto k1 = tl::gen_forked_power_counterexample(Graph(1, {}), 4);
  CHECK(k1.graph.order() == 2);
  CHECK(k1.x == VertexSet{1});
  CHECK_THROWS_AS(tl::gen_forked_power_counterexample(c4, 3), InputError);
}

TEST_CASE("circular-arc generator") {
  std::vector<tl::Arc> square{{0, 2}, {1, 2}, {2, 2}, {3, 2}};
  auto c4 = tl::gen_circular_arc(square, 4);
  CHECK(tl::is_isomorphic_small(c4.graph, tl::gen_cycle(4).graph));
  CHECK(validate(c4.graph, c4.td).ok());
  CHECK(independence_number(c4.graph, c4.td) == 2);

  std::vector<tl::Arc> through{{0, 3}, {5, 2}, {4, 3}, {2, 9}};
  auto star = tl::gen_circular_arc(through, 6);
  CHECK(star.td.nodes == 1);
  CHECK(independence_number(star.graph, star.td) == 1);

  std::vector<tl::Arc> disjoint{{0, 1}, {2, 1}, {4, 2}};
  auto apart = tl::gen_circular_arc(disjoint, 7);
  CHECK(apart.graph.size() == 0);
  CHECK(validate(apart.graph, apart.td).ok());
  CHECK(independence_number(apart.graph, apart.td) <= 2);
  CHECK_THROWS_AS(tl::gen_circular_arc({}, 3), InputError);
  CHECK_THROWS_AS(tl::gen_circular_arc({{0, 0}}, 3), InputError);
}

TEST_CASE("isomorphism") {
  Graph c4 = tl::gen_cycle(4).graph;
  std::vector<Edge> relabeled{{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  CHECK(tl::is_isomorphic_small(c4, Graph(4, relabeled)));
  CHECK(!tl::is_isomorphic_small(c4, tl::gen_path(4).graph));
  CHECK(tl::is_isomorphic_small(tl::gen_kab(2, 2).graph, c4));
  CHECK(!tl::is_isomorphic_small(tl::gen_cycle(6).graph, Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK_THROWS_AS(tl::is_isomorphic_small(tl::gen_path(11).graph, tl::gen_path(11).graph), GuardError);
}

TEST_CASE("guards") {
  auto g = tl::parse_guards("induced=22,tin=9");
  CHECK(g.induced == 22);
  CHECK(g.tin == 9);
  CHECK(g.packing == 18);
  CHECK_THROWS_AS(tl::parse_guards("speed=3"), InputError);
  CHECK_THROWS_AS(tl::parse_guards("tin=99"), InputError);
  CHECK_THROWS_AS(tl::brute_best_induced(tl::gen_path(21).graph, tl::parse_property("mwis"), 1), GuardError);
  setenv("TINLAB_GUARDS", "tin=9", 1);
  CHECK(tl::exact_tin_small(tl::gen_path(9).graph) == 1);
  unsetenv("TINLAB_GUARDS");
}
