#include "tinlab/testlab.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "tinlab/errors.hpp"

namespace tinlab::testlab {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

int popcount(Mask m) { return __builtin_popcountll(m); }

int lowest(Mask m) { return __builtin_ctzll(m); }

void guard(int n, int limit, const char* what) {
  if (n > limit) {
    throw GuardError(std::string(what) + " refused: size " + std::to_string(n) + " exceeds guard " +
                     std::to_string(limit) + " (raise via TINLAB_GUARDS)");
  }
}

// Adjacency of G[f] as bitmasks over local indices 0..|f|-1.
std::vector<Mask> local_adjacency(const Graph& g, const VertexSet& f) {
  std::vector<Mask> adj(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (g.adjacent(f[i], f[j])) {
        adj[i] |= bit(static_cast<int>(j));
        adj[j] |= bit(static_cast<int>(i));
      }
    }
  }
  return adj;
}

std::vector<Mask> full_adjacency(const Graph& g) {
  VertexSet all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return local_adjacency(g, all);
}

bool has_edge(const std::vector<Mask>& adj) {
  return std::any_of(adj.begin(), adj.end(), [](Mask m) { return m != 0; });
}

bool acyclic(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (int u = 0; u < n; ++u) {
    for (Mask m = adj[static_cast<std::size_t>(u)] & ~(bit(u + 1) - 1); m; m &= m - 1) {
      int v = lowest(m);
      int a = find(u), b = find(v);
      if (a == b) return false;
      parent[static_cast<std::size_t>(a)] = b;
    }
  }
  return true;
}

bool two_colorable(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (Mask m = adj[static_cast<std::size_t>(u)]; m; m &= m - 1) {
        int v = lowest(m);
        if (side[static_cast<std::size_t>(v)] < 0) {
          side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Backtracking coloring; `allowed[i]` is a bitmask of colors for vertex i.
bool colorable(const std::vector<Mask>& adj, const std::vector<unsigned>& allowed) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (unsigned m = allowed[static_cast<std::size_t>(i)]; m; m &= m - 1) {
      int c = __builtin_ctz(m);
      bool clash = false;
      for (Mask nb = adj[static_cast<std::size_t>(i)] & (bit(i) - 1); nb && !clash; nb &= nb - 1) {
        clash = color[static_cast<std::size_t>(lowest(nb))] == c;
      }
      if (clash) continue;
      color[static_cast<std::size_t>(i)] = c;
      if (place(i + 1)) return true;
    }
    color[static_cast<std::size_t>(i)] = -1;
    return false;
  };
  return place(0);
}

bool at_most_colors(const std::vector<Mask>& adj, int r) {
  if (r <= 0) return adj.empty();
  std::vector<unsigned> allowed(adj.size(), (1U << r) - 1);
  return colorable(adj, allowed);
}

int mis_size(const std::vector<Mask>& adj, Mask candidates) {
  if (!candidates) return 0;
  int v = lowest(candidates);
  Mask rest = candidates & ~bit(v);
  int without = mis_size(adj, rest);
  int with = 1 + mis_size(adj, rest & ~adj[static_cast<std::size_t>(v)]);
  return std::max(without, with);
}

VertexSet members_of(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(lowest(m));
  return s;
}

Weight mask_weight(const std::vector<Weight>& w, Mask m) {
  Weight total = 0;
  for (; m; m &= m - 1) total += w[static_cast<std::size_t>(lowest(m))];
  return total;
}

// Connected components of the subgraph induced by `s`, as masks.
std::vector<Mask> components(const std::vector<Mask>& adj, Mask s) {
  std::vector<Mask> out;
  while (s) {
    Mask comp = bit(lowest(s));
    Mask frontier = comp;
    while (frontier) {
      int u = lowest(frontier);
      frontier &= frontier - 1;
      Mask fresh = adj[static_cast<std::size_t>(u)] & s & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    s &= ~comp;
  }
  return out;
}

// BFS distances in the host from a set of sources; -1 when unreachable.
std::vector<int> distances_from(const Graph& g, const VertexSet& sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool far_apart(const std::vector<int>& dist_from_a, const VertexSet& b, int d) {
  return std::all_of(b.begin(), b.end(), [&](Vertex v) {
    int x = dist_from_a[static_cast<std::size_t>(v)];
    return x < 0 || x >= d;
  });
}

std::vector<Mask> packing_compatibility(const SubgraphFamily& fam, int d) {
  const std::size_t j = fam.members.size();
  std::vector<Mask> ok(j, 0);
  for (std::size_t a = 0; a < j; ++a) {
    auto dist = distances_from(fam.host, fam.members[a]);
    for (std::size_t b = 0; b < j; ++b) {
      if (a != b && far_apart(dist, fam.members[b], d)) ok[a] |= bit(static_cast<int>(b));
    }
  }
  return ok;
}

}  // namespace

Guards parse_guards(std::string_view text) {
  Guards g;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("guard entry '" + std::string(item) + "' lacks '='");
    std::string_view name = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || v < 0 || v > 30) {
      throw InputError("guard value '" + std::string(value) + "' must be an integer in 0..30");
    }
    if (name == "induced") g.induced = v;
    else if (name == "target") g.target = v;
    else if (name == "packing") g.packing = v;
    else if (name == "tin") g.tin = v;
    else if (name == "iso") g.iso = v;
    else throw InputError("unknown guard '" + std::string(name) + "'");
  }
  return g;
}

Guards active_guards() {
  const char* env = std::getenv("TINLAB_GUARDS");
  return env ? parse_guards(env) : Guards{};
}

int PropertyQuery::chromatic_cap() const {
  switch (kind) {
    case PropertyKind::independent_set: return 1;
    case PropertyKind::forest:
    case PropertyKind::bipartite: return 2;
    case PropertyKind::colorable:
    case PropertyKind::list_colorable: return colors;
  }
  return colors;
}

PropertyQuery parse_property(std::string_view spec, std::vector<std::vector<int>> lists) {
  PropertyQuery q;
  auto colors_after = [&](std::size_t prefix) {
    std::string_view rest = spec.substr(prefix);
    int r = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), r);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || r < 1 || r > 8) {
      throw InputError("bad color count in '" + std::string(spec) + "'");
    }
    return r;
  };
  if (spec == "mwis") {
    q.kind = PropertyKind::independent_set;
  } else if (spec == "forest") {
    q.kind = PropertyKind::forest;
    q.colors = 2;
  } else if (spec == "bipartite") {
    q.kind = PropertyKind::bipartite;
    q.colors = 2;
  } else if (spec.starts_with("color:")) {
    q.kind = PropertyKind::colorable;
    q.colors = colors_after(6);
  } else if (spec.starts_with("listcolor:")) {
    q.kind = PropertyKind::list_colorable;
    q.colors = colors_after(10);
    q.lists = std::move(lists);
  } else {
    throw InputError("unknown property '" + std::string(spec) + "'");
  }
  return q;
}

bool satisfies(const Graph& g, const VertexSet& f, const PropertyQuery& query, int r) {
  const auto adj = local_adjacency(g, f);
  bool ok = false;
  switch (query.kind) {
    case PropertyKind::independent_set: ok = !has_edge(adj); break;
    case PropertyKind::forest: ok = acyclic(adj); break;
    case PropertyKind::bipartite: ok = two_colorable(adj); break;
    case PropertyKind::colorable: ok = at_most_colors(adj, query.colors); break;
    case PropertyKind::list_colorable: {
      std::vector<unsigned> allowed(f.size(), 0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto v = static_cast<std::size_t>(f[i]);
        if (v >= query.lists.size()) continue;
        for (int c : query.lists[v]) {
          if (c >= 0 && c < query.colors) allowed[i] |= 1U << c;
        }
      }
      ok = colorable(adj, allowed);
      break;
    }
  }
  return ok && at_most_colors(adj, r);
}

bool satisfies_target(const Graph& g, const VertexSet& f, const VertexSet& x, const PropertyQuery& query, int r) {
  if (!std::includes(f.begin(), f.end(), x.begin(), x.end())) return false;
  if (!satisfies(g, f, query, r)) return false;
  if (query.kind != PropertyKind::forest) return x == f;
  const auto adj = local_adjacency(g, f);
  Mask xm = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::binary_search(x.begin(), x.end(), f[i])) xm |= bit(static_cast<int>(i));
  }
  const Mask all = f.size() >= 64 ? ~Mask{0} : bit(static_cast<int>(f.size())) - 1;
  auto comps = components(adj, all);
  return std::all_of(comps.begin(), comps.end(), [&](Mask c) { return popcount(c & xm) <= 1; });
}

OracleResult brute_best_induced(const Graph& g, const PropertyQuery& query, int r) {
  const int n = g.order();
  guard(n, active_guards().induced, "brute_best_induced");
  OracleResult best;
  for (Mask m = 0; m < bit(n); ++m) {
    Weight w = mask_weight(g.weights(), m);
    if (m != 0 && w <= best.optimum) continue;
    VertexSet f = members_of(m);
    if (!satisfies(g, f, query, r)) continue;
    if (m == 0 || w > best.optimum) {
      best.optimum = w;
      best.witness = std::move(f);
    }
  }
  return best;
}

TargetOracleResult brute_best_target(const Graph& g, const PropertyQuery& query, int r) {
  const int n = g.order();
  guard(n, active_guards().target, "brute_best_target");
  const auto adj = full_adjacency(g);
  TargetOracleResult best;
  for (Mask f = 0; f < bit(n); ++f) {
    if (!satisfies(g, members_of(f), query, r)) continue;
    std::vector<Mask> comps = components(adj, f);
    // Enumerate every X ⊆ F, including X = F and X = ∅.
    for (Mask x = f;; x = (x - 1) & f) {
      bool ok = true;
      if (query.kind == PropertyKind::forest) {
        ok = std::all_of(comps.begin(), comps.end(), [&](Mask c) { return popcount(c & x) <= 1; });
      } else {
        ok = x == f;
      }
      if (ok) {
        Weight w = mask_weight(g.weights(), x);
        if (w > best.optimum) {
          best.optimum = w;
          best.f = members_of(f);
          best.x = members_of(x);
        }
      }
      if (x == 0) break;
    }
  }
  return best;
}

OracleResult brute_packing(const SubgraphFamily& fam, int d) {
  if (d < 1) throw InputError("packing distance must be positive");
  const int j = static_cast<int>(fam.members.size());
  guard(j, active_guards().packing, "brute_packing");
  const auto ok = packing_compatibility(fam, d);
  OracleResult best;
  for (Mask m = 1; m < bit(j); ++m) {
    bool feasible = true;
    for (Mask rest = m; rest && feasible; rest &= rest - 1) {
      int a = lowest(rest);
      feasible = (m & ~bit(a) & ~ok[static_cast<std::size_t>(a)]) == 0;
    }
    if (!feasible) continue;
    Weight w = mask_weight(fam.member_weights, m);
    if (w > best.optimum) {
      best.optimum = w;
      best.witness = members_of(m);
    }
  }
  return best;
}

bool verify_packing(const SubgraphFamily& fam, const std::vector<int>& chosen, int d) {
  std::set<int> seen;
  for (int j : chosen) {
    if (j < 0 || j >= static_cast<int>(fam.members.size()) || !seen.insert(j).second) return false;
  }
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    auto dist = distances_from(fam.host, fam.members[static_cast<std::size_t>(chosen[a])]);
    for (std::size_t b = 0; b < chosen.size(); ++b) {
      if (a != b && !far_apart(dist, fam.members[static_cast<std::size_t>(chosen[b])], d)) return false;
    }
  }
  return true;
}

int brute_alpha(const Graph& g, const VertexSet& s) {
  return mis_size(local_adjacency(g, s), s.size() >= 64 ? ~Mask{0} : bit(static_cast<int>(s.size())) - 1);
}

int exact_tin_small(const Graph& g) {
  const int n = g.order();
  guard(n, active_guards().tin, "exact_tin_small");
  if (n == 0) return 0;
  const auto adj = full_adjacency(g);
  const Mask all = bit(n) - 1;
  // Vertices outside s ∪ {v} reachable from v through s.
  auto q = [&](Mask s, int v) {
    Mask reached = bit(v);
    Mask frontier = bit(v);
    Mask boundary = 0;
    while (frontier) {
      int u = lowest(frontier);
      frontier &= frontier - 1;
      Mask nb = adj[static_cast<std::size_t>(u)] & ~reached;
      reached |= nb;
      boundary |= nb & ~s;
      frontier |= nb & s;
    }
    return boundary;
  };
  std::vector<int> best(static_cast<std::size_t>(all) + 1, n + 1);
  best[0] = 0;
  for (Mask s = 1; s <= all; ++s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = lowest(rest);
      Mask before = s & ~bit(v);
      int bag_alpha = mis_size(adj, bit(v) | q(before, v));
      best[s] = std::min(best[s], std::max(best[before], bag_alpha));
    }
  }
  return best[all];
}

bool brute_is_chordal(const Graph& g) {
  const int n = g.order();
  guard(n, 12, "brute_is_chordal");
  const auto adj = full_adjacency(g);
  for (Mask m = 0; m < bit(n); ++m) {
    if (popcount(m) < 4) continue;
    bool cycle = true;
    for (Mask rest = m; rest && cycle; rest &= rest - 1) {
      cycle = popcount(adj[static_cast<std::size_t>(lowest(rest))] & m) == 2;
    }
    if (cycle && components(adj, m).size() == 1) return false;
  }
  return true;
}

bool is_isomorphic_small(const Graph& a, const Graph& b) {
  const int n = a.order();
  guard(std::max(n, b.order()), active_guards().iso, "is_isomorphic_small");
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const auto adj_a = full_adjacency(a);
  const auto adj_b = full_adjacency(b);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return da[static_cast<std::size_t>(x)] > da[static_cast<std::size_t>(y)]; });
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  Mask used = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == order.size()) return true;
    const int u = order[i];
    for (int w = 0; w < n; ++w) {
      if ((used & bit(w)) || db[static_cast<std::size_t>(w)] != da[static_cast<std::size_t>(u)]) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < i && consistent; ++j) {
        const int p = order[j];
        const bool ea = (adj_a[static_cast<std::size_t>(u)] >> p) & 1;
        const bool eb = (adj_b[static_cast<std::size_t>(w)] >> image[static_cast<std::size_t>(p)]) & 1;
        consistent = ea == eb;
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(u)] = w;
      used |= bit(w);
      if (extend(i + 1)) return true;
      used &= ~bit(w);
    }
    image[static_cast<std::size_t>(u)] = -1;
    return false;
  };
  return extend(0);
}

Instance gen_random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("chordal generator needs n >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(std::clamp(density, 0.0, 1.0));
  std::vector<VertexSet> bags{{0}};
  std::vector<std::pair<int, int>> tree;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> node_of(0, bags.size() - 1);
    const std::size_t t = node_of(rng);
    VertexSet k;
    for (Vertex u : bags[t]) {
      if (pick(rng)) k.push_back(u);
    }
    for (Vertex u : k) edges.emplace_back(u, v);
    if (k.size() == bags[t].size()) {
      bags[t].push_back(v);
    } else if (k.empty()) {
      tree.emplace_back(static_cast<int>(bags.size()) - 1, static_cast<int>(bags.size()));
      bags.push_back({v});
    } else {
      k.push_back(v);
      tree.emplace_back(static_cast<int>(t), static_cast<int>(bags.size()));
      bags.push_back(std::move(k));
    }
  }
  TreeDecomposition td;
  td.nodes = static_cast<int>(bags.size());
  td.bags = std::move(bags);
  td.tree_edges = std::move(tree);
  return {Graph(n, edges), std::move(td)};
}

Instance gen_split(int clique, int independent, double p, std::uint64_t seed) {
  if (clique < 0 || independent < 0 || clique + independent < 1) throw InputError("split generator needs a vertex");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> edges;
  TreeDecomposition td;
  VertexSet core(static_cast<std::size_t>(clique));
  std::iota(core.begin(), core.end(), 0);
  for (Vertex u = 0; u < clique; ++u) {
    for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  }
  td.bags.push_back(core);
  for (Vertex v = clique; v < clique + independent; ++v) {
    VertexSet bag;
    for (Vertex u = 0; u < clique; ++u) {
      if (pick(rng)) {
        edges.emplace_back(u, v);
        bag.push_back(u);
      }
    }
    bag.push_back(v);
    td.tree_edges.emplace_back(0, static_cast<int>(td.bags.size()));
    td.bags.push_back(std::move(bag));
  }
  td.nodes = static_cast<int>(td.bags.size());
  return {Graph(clique + independent, edges), std::move(td)};
}

Instance gen_kab(int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) throw InputError("K_{a,b} generator needs a vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  VertexSet side(static_cast<std::size_t>(a));
  std::iota(side.begin(), side.end(), 0);
  TreeDecomposition td;
  if (b == 0) td.bags.push_back(side);
  for (Vertex v = a; v < a + b; ++v) {
    VertexSet bag = side;
    bag.push_back(v);
    if (!td.bags.empty()) td.tree_edges.emplace_back(static_cast<int>(td.bags.size()) - 1, static_cast<int>(td.bags.size()));
    td.bags.push_back(std::move(bag));
  }
  td.nodes = static_cast<int>(td.bags.size());
  return {Graph(a + b, edges), std::move(td)};
}

Instance gen_path(int n) {
  if (n < 1) throw InputError("path generator needs n >= 1");
  std::vector<Edge> edges;
  TreeDecomposition td;
  if (n == 1) td.bags.push_back({0});
  for (Vertex v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
    if (v > 0) td.tree_edges.emplace_back(v - 1, v);
    td.bags.push_back({v, v + 1});
  }
  td.nodes = static_cast<int>(td.bags.size());
  return {Graph(n, edges), std::move(td)};
}

Instance gen_cycle(int n) {
  if (n < 3) throw InputError("cycle generator needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  TreeDecomposition td;
  for (Vertex i = 1; i + 1 < n; ++i) {
    if (i > 1) td.tree_edges.emplace_back(i - 2, i - 1);
    td.bags.push_back({0, i, i + 1});
  }
  td.nodes = static_cast<int>(td.bags.size());
  return {Graph(n, edges), std::move(td)};
}

ForkedCounterexample gen_forked_power_counterexample(const Graph& h, int k) {
  if (k < 2 || k % 2 != 0) throw InputError("counterexample needs an even k >= 2, got " + std::to_string(k));
  const int n = h.order();
  const auto h_edges = h.edges();
  const int m = static_cast<int>(h_edges.size());
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    const Vertex s = n + e;
    edges.emplace_back(h_edges[static_cast<std::size_t>(e)].first, s);
    edges.emplace_back(h_edges[static_cast<std::size_t>(e)].second, s);
    for (int f = e + 1; f < m; ++f) edges.emplace_back(s, n + f);
  }
  const int tail = (k - 2) / 2;
  Vertex next = n + m;
  ForkedCounterexample out;
  for (Vertex v = 0; v < n; ++v) {
    Vertex end = v;
    for (int i = 0; i < tail; ++i) {
      edges.emplace_back(end, next);
      end = next++;
    }
    out.x.push_back(end);
  }
  normalize(out.x);
  out.graph = Graph(next, edges);
  return out;
}

Instance gen_circular_arc(const std::vector<Arc>& arcs, int m) {
  if (m < 1) throw InputError("circular-arc generator needs m >= 1 points");
  if (arcs.empty()) throw InputError("circular-arc generator needs at least one arc");
  for (const Arc& a : arcs) {
    if (a.start < 0 || a.start >= m || a.length < 1) {
      throw InputError("arc (" + std::to_string(a.start) + ", " + std::to_string(a.length) + ") outside 0.." +
                       std::to_string(m - 1));
    }
  }
  auto covers = [&](const Arc& a, int q) { return a.length >= m || ((q - a.start) % m + m) % m < a.length; };

  const int count = static_cast<int>(arcs.size());
  std::vector<VertexSet> at(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    for (Vertex i = 0; i < count; ++i) {
      if (covers(arcs[static_cast<std::size_t>(i)], q)) at[static_cast<std::size_t>(q)].push_back(i);
    }
  }
  std::set<Edge> edge_set;
  for (const auto& here : at) {
    for (std::size_t i = 0; i < here.size(); ++i) {
      for (std::size_t j = i + 1; j < here.size(); ++j) edge_set.emplace(here[i], here[j]);
    }
  }
  std::vector<Edge> edges(edge_set.begin(), edge_set.end());

  int cut = 0;
  for (int q = 1; q < m; ++q) {
    if (at[static_cast<std::size_t>(q)].size() > at[static_cast<std::size_t>(cut)].size()) cut = q;
  }
  const VertexSet& through = at[static_cast<std::size_t>(cut)];
  TreeDecomposition td;
  for (int step = 1; step < m; ++step) {
    const int q = (cut + step) % m;
    VertexSet bag = through;
    for (Vertex i : at[static_cast<std::size_t>(q)]) {
      if (!covers(arcs[static_cast<std::size_t>(i)], cut)) bag.push_back(i);
    }
    normalize(bag);
    if (!td.bags.empty() && td.bags.back() == bag) continue;
    if (!td.bags.empty()) td.tree_edges.emplace_back(static_cast<int>(td.bags.size()) - 1, static_cast<int>(td.bags.size()));
    td.bags.push_back(std::move(bag));
  }
  if (td.bags.empty()) td.bags.push_back(through);
  td.nodes = static_cast<int>(td.bags.size());
  return {Graph(count, edges), std::move(td)};
}

std::vector<Arc> random_arcs(int count, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> start(0, m - 1);
  std::uniform_int_distribution<int> length(1, m);
  std::vector<Arc> arcs;
  for (int i = 0; i < count; ++i) arcs.push_back({start(rng), length(rng)});
  return arcs;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution pick(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (pick(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

TreeDecomposition elimination_decomposition(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw InputError("elimination order must list every vertex once");
  TreeDecomposition td;
  if (n == 0) {
    td.nodes = 1;
    td.bags.push_back({});
    return td;
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    if (!g.contains(v) || position[static_cast<std::size_t>(v)] >= 0) {
      throw InputError("elimination order must list every vertex once");
    }
    position[static_cast<std::size_t>(v)] = i;
  }
  std::vector<std::set<Vertex>> fill(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) fill[static_cast<std::size_t>(v)].insert(u);
  }
  td.nodes = n;
  td.bags.resize(static_cast<std::size_t>(n));
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    VertexSet later;
    for (Vertex u : fill[static_cast<std::size_t>(v)]) {
      if (position[static_cast<std::size_t>(u)] > i) later.push_back(u);
    }
    for (Vertex a : later) {
      for (Vertex b : later) {
        if (a != b) fill[static_cast<std::size_t>(a)].insert(b);
      }
    }
    VertexSet bag = later;
    bag.push_back(v);
    td.bags[static_cast<std::size_t>(i)] = normalized(std::move(bag));
    if (later.empty()) {
      if (previous_root >= 0) td.tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    } else {
      auto parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
        return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
      });
      td.tree_edges.emplace_back(i, position[static_cast<std::size_t>(parent)]);
    }
  }
  return td;
}

Instance random_instance(int n, double p, std::mt19937_64& rng) {
  Graph g = random_graph(n, p, rng);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  TreeDecomposition td = elimination_decomposition(g, order);
  return {std::move(g), std::move(td)};
}

std::vector<Weight> random_weights(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> halves(0, 6);
  std::vector<Weight> w;
  for (int i = 0; i < n; ++i) w.emplace_back(Weight(halves(rng)) / 2);
  return w;
}

SubgraphFamily random_family(const Graph& g, int count, int max_size, std::mt19937_64& rng) {
  SubgraphFamily fam{g, {}, {}};
  if (g.empty()) return fam;
  std::uniform_int_distribution<Vertex> vertex(0, g.order() - 1);
  std::uniform_int_distribution<int> size(1, std::max(1, max_size));
  for (int j = 0; j < count; ++j) {
    VertexSet member{vertex(rng)};
    const int want = size(rng);
    while (static_cast<int>(member.size()) < want) {
      VertexSet frontier;
      for (Vertex u : member) {
        for (Vertex v : g.neighbors(u)) {
          if (!std::binary_search(member.begin(), member.end(), v)) frontier.push_back(v);
        }
      }
      if (frontier.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
      Vertex v = frontier[pick(rng)];
      member.insert(std::lower_bound(member.begin(), member.end(), v), v);
    }
    fam.members.push_back(std::move(member));
  }
  fam.member_weights = random_weights(count, rng);
  return fam;
}

}  // namespace tinlab::testlab
