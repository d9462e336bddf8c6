#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tinlab/algebras.hpp"
#include "tinlab/errors.hpp"
#include "tinlab/sparse_dp.hpp"
#include "tinlab/testlab.hpp"

using namespace tinlab;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

TreeDecomposition single_bag(int n) {
  TreeDecomposition td;
  td.nodes = 1;
  td.bags.push_back({});
  for (int v = 0; v < n; ++v) td.bags[0].push_back(v);
  return td;
}

Weight optimum(const Graph& g, const TreeDecomposition& td, const PropertyAlgebra& a, int k,
               const VertexAnnotations& ann = {}) {
  auto sol = solve(g, td, a, k, ann);
  REQUIRE(sol.has_value());
  return sol->total_weight;
}

// States reachable by introducing the vertices of F in order and forgetting
// those outside `keep`, grouped by the surviving boundary.
std::map<VertexSet, std::set<AlgebraState>> reachable(const Graph& g, const PropertyAlgebra& a, const VertexSet& keep,
                                                      const VertexAnnotations& ann) {
  std::map<VertexSet, std::set<AlgebraState>> out;
  const int n = g.order();
  for (unsigned f = 0; f < (1U << n); ++f) {
    VertexSet boundary;
    std::vector<char> flags;
    std::vector<AlgebraState> states{a.empty_state()};
    for (Vertex v = 0; v < n && !states.empty(); ++v) {
      if (!((f >> v) & 1U)) continue;
      VertexSet before = boundary;
      std::vector<char> before_flags = flags;
      boundary.push_back(v);
      flags.push_back(0);
      Introduction in;
      in.vertex = v;
      in.position = before.size();
      for (std::size_t i = 0; i < before.size(); ++i)
        if (g.adjacent(before[i], v)) in.neighbors.push_back(i);
      in.annotations = ann.count() ? ann.mask(v) : 0;
      Boundary b(g, before, before_flags), af(g, boundary, flags);
      std::vector<AlgebraState> next;
      for (const auto& s : states)
        for (auto& t : a.introduce(s, b, af, in)) next.push_back(std::move(t));
      states = std::move(next);
    }
    for (Vertex v = n - 1; v >= 0 && !states.empty(); --v) {
      auto it = std::find(boundary.begin(), boundary.end(), v);
      if (it == boundary.end() || std::binary_search(keep.begin(), keep.end(), v)) continue;
      Boundary b(g, boundary, flags);
      const auto pos = static_cast<std::size_t>(it - boundary.begin());
      std::vector<AlgebraState> next;
      for (const auto& s : states)
        if (auto t = a.forget(s, b, pos)) next.push_back(*t);
      boundary.erase(it);
      flags.erase(flags.begin() + static_cast<std::ptrdiff_t>(pos));
      states = std::move(next);
    }
    for (auto& s : states) out[boundary].insert(s);
  }
  return out;
}

class RogueAlgebra final : public PropertyAlgebra {
 public:
  std::string name() const override { return "rogue"; }
  int chromatic_bound() const override { return 1; }
  std::vector<AlgebraState> introduce(const AlgebraState&, const Boundary&, const Boundary&,
                                      const Introduction&) const override {
    return {AlgebraState{7}};
  }
  std::optional<AlgebraState> forget(const AlgebraState& s, const Boundary&, std::size_t) const override { return s; }
  std::vector<AlgebraState> join(const AlgebraState& a, const AlgebraState&, const Boundary&) const override {
    return {a};
  }
  bool accepts(const AlgebraState&) const override { return true; }
  bool well_formed(const AlgebraState& s, const Boundary&) const override { return s.empty(); }
};

}  // namespace

TEST_CASE("catalog examples") {
  auto c4 = testlab::gen_cycle(4);
  auto c5 = testlab::gen_cycle(5);
  CHECK(optimum(c4.graph, c4.td, *make_independent_set(), 2) == 2);
  CHECK(optimum(complete(4), single_bag(4), *make_forest(), 1) == 2);
  CHECK(optimum(c5.graph, c5.td, *make_bipartite(), 2) == 4);
  CHECK(optimum(complete(3), single_bag(3), *make_forest(), 1) == 2);
  CHECK(optimum(complete(4), single_bag(4), *make_r_colorable(3), 1) == 3);
  CHECK(optimum(c5.graph, c5.td, *make_r_colorable(3), 2) == 5);
}

TEST_CASE("catalog names and guards") {
  std::vector<std::string> names;
  for (const auto& a : algebra_catalog()) names.push_back(a->name());
  CHECK(names == std::vector<std::string>{"mwis", "forest", "bipartite", "color:3", "listcolor:3"});
  CHECK(make_algebra("color:5")->chromatic_bound() == 5);
  CHECK_THROWS_AS(make_r_colorable(0), InputError);
  CHECK_THROWS_AS(make_r_colorable(9), InputError);
  CHECK_THROWS_AS(make_list_colorable(9), InputError);
  CHECK_THROWS_AS(make_algebra("planar"), InputError);
  CHECK_THROWS_AS(make_algebra("color:x"), InputError);
  CHECK_THROWS_AS(list_annotations({{0, 3}}, 3), InputError);
}

TEST_CASE("forest states on a single triangle bag keep at most two vertices") {
  Graph k3 = complete(3);
  auto states = reachable(k3, *make_forest(), VertexSet{0, 1, 2}, {});
  CHECK(states.count(VertexSet{0, 1, 2}) == 0);
  CHECK(states.count(VertexSet{0, 1}) == 1);
}

TEST_CASE("bipartite states on an odd cycle never cover it") {
  Graph c5 = testlab::gen_cycle(5).graph;
  auto states = reachable(c5, *make_bipartite(), VertexSet{0, 1, 2, 3, 4}, {});
  CHECK(states.count(VertexSet{0, 1, 2, 3, 4}) == 0);
  CHECK(states.count(VertexSet{0, 1, 2, 3}) == 1);
}

TEST_CASE("join is commutative on reachable states") {
  std::mt19937_64 rng(13);
  for (const auto& algebra : algebra_catalog()) {
    for (int i = 0; i < 6; ++i) {
      Graph g = testlab::random_graph(6, 0.5, rng);
      std::vector<std::vector<int>> lists(6);
      for (auto& l : lists)
        for (int c = 0; c < 3; ++c)
          if (rng() % 2) l.push_back(c);
      VertexAnnotations ann = algebra->name() == "listcolor:3" ? list_annotations(lists, 3) : VertexAnnotations{};
      VertexSet keep{0, 2, 3};
      for (const auto& [boundary, states] : reachable(g, *algebra, keep, ann)) {
        std::vector<char> flags(boundary.size(), 0);
        Boundary b(g, boundary, flags);
        for (const auto& x : states) {
          for (const auto& y : states) {
            auto xy = algebra->join(x, y, b);
            auto yx = algebra->join(y, x, b);
            CHECK(std::set<AlgebraState>(xy.begin(), xy.end()) == std::set<AlgebraState>(yx.begin(), yx.end()));
          }
        }
      }
    }
  }
}

TEST_CASE("base mode matches brute force") {
  std::mt19937_64 rng(31);
  for (const auto& algebra : algebra_catalog()) {
    for (int i = 0; i < 40; ++i) {
      const int n = 1 + i % 10;
      auto inst = testlab::random_instance(n, 0.4, rng);
      inst.graph = inst.graph.with_weights(testlab::random_weights(n, rng));
      std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
      for (auto& l : lists)
        for (int c = 0; c < 3; ++c)
          if (rng() % 3) l.push_back(c);
      bool listed = algebra->name() == "listcolor:3";
      VertexAnnotations ann = listed ? list_annotations(lists, 3) : VertexAnnotations{};
      const int k = std::max(1, independence_number(inst.graph, inst.td));
      auto sol = solve(inst.graph, inst.td, *algebra, k, ann);
      REQUIRE(sol.has_value());
      auto query = testlab::parse_property(algebra->name(), listed ? lists : std::vector<std::vector<int>>{});
      CHECK(sol->total_weight == testlab::brute_best_induced(inst.graph, query, algebra->chromatic_bound()).optimum);
      CHECK(testlab::satisfies(inst.graph, sol->solution, query, algebra->chromatic_bound()));
      CHECK(sol->stats.max_boundary <= sol->stats.boundary_cap);
      CHECK(sol->stats.boundary_cap == static_cast<std::size_t>(k * algebra->chromatic_bound()));
    }
  }
}

TEST_CASE("lists holding every color behave like r-colorability") {
  std::mt19937_64 rng(41);
  auto full = make_list_colorable(3);
  auto plain = make_r_colorable(3);
  for (int i = 0; i < 30; ++i) {
    auto inst = testlab::random_instance(9, 0.5, rng);
    std::vector<std::vector<int>> lists(9, std::vector<int>{0, 1, 2});
    const int k = std::max(1, independence_number(inst.graph, inst.td));
    auto a = solve(inst.graph, inst.td, *full, k, list_annotations(lists, 3));
    auto b = solve(inst.graph, inst.td, *plain, k);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->total_weight == b->total_weight);
  }
}

TEST_CASE("target mode") {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  Graph triangles(6, e);
  TreeDecomposition td;
  td.nodes = 2;
  td.bags = {{0, 1, 2}, {3, 4, 5}};
  td.tree_edges = {{0, 1}};
  auto sol = solve_with_target(triangles, td, *make_forest(), 1);
  REQUIRE(sol.has_value());
  REQUIRE(sol->target.has_value());
  CHECK(sol->total_weight == 2);
  auto query = testlab::parse_property("forest");
  CHECK(testlab::brute_best_target(triangles, query, 2).optimum == 2);
  CHECK(testlab::satisfies_target(triangles, sol->solution, *sol->target, query, 2));

  auto c6 = testlab::gen_cycle(6);
  auto base = solve(c6.graph, c6.td, *make_independent_set(), 2);
  auto targeted = solve_with_target(c6.graph, c6.td, *make_independent_set(), 2);
  REQUIRE(base.has_value());
  REQUIRE(targeted.has_value());
  CHECK(base->total_weight == targeted->total_weight);
  CHECK(*targeted->target == targeted->solution);

  std::mt19937_64 rng(53);
  for (const auto& algebra : algebra_catalog()) {
    if (algebra->name() == "listcolor:3") continue;
    for (int i = 0; i < 25; ++i) {
      const int n = 1 + i % 8;
      auto inst = testlab::random_instance(n, 0.45, rng);
      inst.graph = inst.graph.with_weights(testlab::random_weights(n, rng));
      const int k = std::max(1, independence_number(inst.graph, inst.td));
      auto got = solve_with_target(inst.graph, inst.td, *algebra, k);
      REQUIRE(got.has_value());
      auto q = testlab::parse_property(algebra->name());
      CHECK(got->total_weight == testlab::brute_best_target(inst.graph, q, algebra->chromatic_bound()).optimum);
      CHECK(testlab::satisfies_target(inst.graph, got->solution, *got->target, q, algebra->chromatic_bound()));
    }
  }
}

TEST_CASE("empty graph, budgets and contracts") {
  auto sol = solve(Graph(), TreeDecomposition{1, {}, {{}}, std::nullopt}, *make_forest(), 1);
  REQUIRE(sol.has_value());
  CHECK(sol->total_weight == 0);
  CHECK(sol->solution.empty());
  auto c4 = testlab::gen_cycle(4);
  CHECK_THROWS_AS(solve(c4.graph, c4.td, *make_forest(), 1), BudgetError);
  CHECK_THROWS_AS(solve(c4.graph, c4.td, *make_forest(), 0), InputError);
  CHECK_THROWS_AS(solve(c4.graph, c4.td, RogueAlgebra{}, 2), ContractViolation);
}
