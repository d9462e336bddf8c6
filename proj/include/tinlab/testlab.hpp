#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tinlab/decomposition.hpp"
#include "tinlab/graph.hpp"
#include "tinlab/lift.hpp"

// Brute-force oracles, generators and independent checkers. Nothing here
// calls into the solvers; predicates are reimplemented on bitmasks.
namespace tinlab::testlab {

/// Size guards for exhaustive searches. Defaults can be raised through the
/// TINLAB_GUARDS environment variable, e.g. "induced=22,packing=20,tin=9".
struct Guards {
  int induced = 20;  ///< brute_best_induced: vertices
  int target = 10;   ///< brute_best_target: vertices (3^n pairs)
  int packing = 18;  ///< brute_packing: family members
  int tin = 8;       ///< exact_tin_small: vertices
  int iso = 10;      ///< is_isomorphic_small: vertices
};

/// Parses "name=value" pairs separated by commas on top of the defaults.
/// Throws InputError on unknown names, bad values or values above 30.
Guards parse_guards(std::string_view text);

/// Defaults overridden by TINLAB_GUARDS when set; read on every call.
Guards active_guards();

struct OracleResult {
  Weight optimum = 0;
  VertexSet witness;
  bool exhaustive = true;
};

enum class PropertyKind { independent_set, forest, bipartite, colorable, list_colorable };

/// Oracle-side description of a catalog property. Lists are 0-based colors.
struct PropertyQuery {
  PropertyKind kind = PropertyKind::independent_set;
  int colors = 1;
  std::vector<std::vector<int>> lists;

  /// Chromatic cap implied by the property.
  int chromatic_cap() const;
};

/// "mwis", "forest", "bipartite", "color:r" or "listcolor:r".
PropertyQuery parse_property(std::string_view spec, std::vector<std::vector<int>> lists = {});

/// Direct check that G[f] has the property and chromatic number at most r.
bool satisfies(const Graph& g, const VertexSet& f, const PropertyQuery& query, int r);

/// X ⊆ F, satisfies(g, f, query, r), and the target rule of brute_best_target.
bool satisfies_target(const Graph& g, const VertexSet& f, const VertexSet& x, const PropertyQuery& query, int r);

/// Maximum-weight f with satisfies(g, f, query, r). Throws GuardError beyond
/// the induced guard.
OracleResult brute_best_induced(const Graph& g, const PropertyQuery& query, int r);

struct TargetOracleResult {
  Weight optimum = 0;
  VertexSet f;
  VertexSet x;
};

/// Enumerates all pairs X ⊆ F ⊆ V. A pair is feasible when G[F] has the
/// property and: for forests, each component of G[F] holds at most one vertex
/// of X; otherwise X = F. Maximizes w(X).
TargetOracleResult brute_best_target(const Graph& g, const PropertyQuery& query, int r);

/// Maximum-weight subfamily with pairwise host distance >= d (members at
/// distance 0 overlap). Witness holds member indices.
OracleResult brute_packing(const SubgraphFamily& fam, int d);

/// Pairwise host distance >= d among the chosen members.
bool verify_packing(const SubgraphFamily& fam, const std::vector<int>& chosen, int d);

/// Exact tree-independence number. Searches all elimination orderings with a
/// subset DP: the bags of an ordering are {v} ∪ Q(S, v), where Q(S, v) holds
/// the vertices outside S ∪ {v} reachable from v through S. Every minimal
/// triangulation arises from some ordering, so the minimum is exact.
int exact_tin_small(const Graph& g);

/// Maximum independent set size of G[s], by enumeration.
int brute_alpha(const Graph& g, const VertexSet& s);

/// Chordless-cycle-free check by brute force over vertex subsets (n <= 12):
/// no induced cycle of length >= 4.
bool brute_is_chordal(const Graph& g);

bool is_isomorphic_small(const Graph& a, const Graph& b);

struct Instance {
  Graph graph;
  TreeDecomposition td;
};

/// Chordal graph grown vertex by vertex: each new vertex joins a random
/// subset of a random bag, picking each member with probability `density`.
/// The decomposition is the resulting clique tree.
Instance gen_random_chordal(int n, double density, std::uint64_t seed);

/// Clique on `clique` vertices plus `independent` vertices, each adjacent to
/// every clique vertex with probability `p`. Star-shaped clique tree.
Instance gen_split(int clique, int independent, double p, std::uint64_t seed);

/// K_{a,b} (first a vertices on one side) with bags A ∪ {b_j} on a path.
Instance gen_kab(int a, int b);

/// P_n with bags {i, i+1}.
Instance gen_path(int n);

/// C_n (n >= 3) with bags {0, i, i+1} on a path.
Instance gen_cycle(int n);

struct ForkedCounterexample {
  Graph graph;
  VertexSet x;
};

/// Subdivides every edge of h once, turns the subdivision vertices into a
/// clique and hangs a path of (k - 2) / 2 edges off every original vertex; X
/// holds the far path ends. Throws InputError unless k is even and >= 2.
ForkedCounterexample gen_forked_power_counterexample(const Graph& h, int k);

struct Arc {
  int start = 0;   ///< first covered point, 0..m-1
  int length = 1;  ///< covered points; >= m covers the whole circle
};

/// Intersection graph of arcs over points 0..m-1 with a decomposition of
/// independence number at most two: cut the circle at the point p covered by
/// most arcs, take the clique path of the other arcs along the cut circle and
/// add the arcs through p to every bag.
Instance gen_circular_arc(const std::vector<Arc>& arcs, int m);

std::vector<Arc> random_arcs(int count, int m, std::mt19937_64& rng);

/// G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Decomposition from eliminating vertices in `order` with fill-in; the
/// pieces of a disconnected graph are chained into one tree.
TreeDecomposition elimination_decomposition(const Graph& g, const std::vector<Vertex>& order);

/// Random graph with a random elimination-ordering decomposition.
Instance random_instance(int n, double p, std::mt19937_64& rng);

/// `count` connected members, each grown from a random vertex to at most
/// `max_size` vertices, with weights drawn from {0, 1/2, 1, ..., 3}.
SubgraphFamily random_family(const Graph& g, int count, int max_size, std::mt19937_64& rng);

/// Weights drawn from {0, 1/2, 1, ..., 3}.
std::vector<Weight> random_weights(int n, std::mt19937_64& rng);

}  // namespace tinlab::testlab
