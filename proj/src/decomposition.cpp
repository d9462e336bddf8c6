#include "tinlab/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "tinlab/errors.hpp"

namespace tinlab {

std::size_t TreeDecomposition::max_bag_size() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::none: return "ok";
    case Axiom::malformed: return "malformed";
    case Axiom::not_a_tree: return "not-a-tree";
    case Axiom::vertex_uncovered: return "vertex-uncovered";
    case Axiom::edge_uncovered: return "edge-uncovered";
    case Axiom::subtree_disconnected: return "subtree-disconnected";
  }
  return "unknown";
}

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::introduce: return "introduce";
    case NodeKind::forget: return "forget";
    case NodeKind::join: return "join";
  }
  return "unknown";
}

namespace {

ValidationReport fail(Axiom axiom, std::string message, std::vector<int> witness = {}) {
  return ValidationReport{axiom, std::move(message), std::move(witness)};
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
  const int n = g.order();
  if (td.nodes < 1) return fail(Axiom::not_a_tree, "decomposition has no nodes");
  if (td.bags.size() != static_cast<std::size_t>(td.nodes)) {
    return fail(Axiom::malformed, "bag count " + std::to_string(td.bags.size()) + " differs from node count " +
                                      std::to_string(td.nodes));
  }
  if (td.root && (*td.root < 0 || *td.root >= td.nodes)) return fail(Axiom::malformed, "root out of range");

  for (int t = 0; t < td.nodes; ++t) {
    const auto& bag = td.bags[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (!g.contains(bag[i])) {
        return fail(Axiom::malformed, "bag " + std::to_string(t) + " holds out-of-range vertex " + std::to_string(bag[i]),
                    {t});
      }
      if (i > 0 && bag[i - 1] >= bag[i]) {
        return fail(Axiom::malformed, "bag " + std::to_string(t) + " is not sorted and duplicate-free", {t});
      }
    }
  }

  if (td.tree_edges.size() != static_cast<std::size_t>(td.nodes - 1)) {
    return fail(Axiom::not_a_tree, "tree has " + std::to_string(td.tree_edges.size()) + " edges on " +
                                       std::to_string(td.nodes) + " nodes");
  }
  std::vector<int> uf(static_cast<std::size_t>(td.nodes));
  std::iota(uf.begin(), uf.end(), 0);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || a >= td.nodes || b < 0 || b >= td.nodes) return fail(Axiom::malformed, "tree edge endpoint out of range");
    int ra = find_root(uf, a), rb = find_root(uf, b);
    if (ra == rb) return fail(Axiom::not_a_tree, "tree edges contain a cycle", {a, b});
    uf[static_cast<std::size_t>(ra)] = rb;
  }

  // occurrences[v] = sorted nodes whose bag contains v
  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(n));
  for (int t = 0; t < td.nodes; ++t) {
    for (Vertex v : td.bags[static_cast<std::size_t>(t)]) occurrences[static_cast<std::size_t>(v)].push_back(t);
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = occurrences[static_cast<std::size_t>(u)];
    const auto& b = occurrences[static_cast<std::size_t>(v)];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      return fail(Axiom::edge_uncovered, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag", {u, v});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occurrences[static_cast<std::size_t>(v)].empty()) {
      return fail(Axiom::vertex_uncovered, "vertex " + std::to_string(v) + " is in no bag", {v});
    }
  }
  // Nodes containing v induce a forest of the tree; connected iff it has
  // exactly (count - 1) internal edges.
  std::vector<std::size_t> internal(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : td.tree_edges) {
    const auto& ba = td.bags[static_cast<std::size_t>(a)];
    const auto& bb = td.bags[static_cast<std::size_t>(b)];
    std::vector<Vertex> common;
    std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
    for (Vertex v : common) ++internal[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (internal[static_cast<std::size_t>(v)] + 1 != occurrences[static_cast<std::size_t>(v)].size()) {
      return fail(Axiom::subtree_disconnected,
                  "nodes containing vertex " + std::to_string(v) + " do not induce a subtree", {v});
    }
  }
  return {};
}

void require_valid(const Graph& g, const TreeDecomposition& td) {
  auto report = validate(g, td);
  if (!report.ok()) throw InputError("invalid tree decomposition (" + std::string(axiom_name(report.failed)) + "): " + report.message);
}

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  // Lowest set bit; call only when !none().
  std::size_t first() const {
    for (std::size_t i = 0;; ++i) {
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class MisSearch {
 public:
  MisSearch(const Graph& g, std::span<const Vertex> s) : vertices_(s.begin(), s.end()) {
    normalize(vertices_);
    const std::size_t k = vertices_.size();
    adj_.assign(k, Bitset(k));
    closed_.assign(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.contains(vertices_[i])) throw InputError("MIS: vertex out of range");
      closed_[i].set(i);
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && g.adjacent(vertices_[i], vertices_[j])) {
          adj_[i].set(j);
          closed_[i].set(j);
        }
      }
    }
  }

  VertexSet run() {
    Bitset all(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) all.set(i);
    std::vector<std::size_t> chosen;
    search(all, chosen);
    VertexSet out;
    for (auto i : best_) out.push_back(vertices_[i]);
    return normalized(std::move(out));
  }

 private:
  std::size_t clique_cover_bound(Bitset p) const {
    std::size_t cliques = 0;
    while (!p.none()) {
      std::size_t u = p.first();
      Bitset cand = p;
      cand &= adj_[u];
      p.reset(u);
      while (!cand.none()) {
        std::size_t w = cand.first();
        cand &= adj_[w];
        p.reset(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(Bitset p, std::vector<std::size_t>& chosen) {
    const std::size_t base = chosen.size();
    // Vertices of degree <= 1 inside p are always safe to take.
    for (bool changed = true; changed && !p.none();) {
      changed = false;
      std::vector<std::size_t> members;
      p.for_each([&](std::size_t i) { members.push_back(i); });
      for (std::size_t i : members) {
        if (p.test(i) && p.count_and(adj_[i]) <= 1) {
          chosen.push_back(i);
          p.subtract(closed_[i]);
          changed = true;
        }
      }
    }
    if (p.none()) {
      if (chosen.size() > best_.size()) best_ = chosen;
    } else if (chosen.size() + clique_cover_bound(p) > best_.size()) {
      std::size_t pivot = 0, pivot_degree = 0;
      bool have = false;
      p.for_each([&](std::size_t i) {
        std::size_t d = p.count_and(adj_[i]);
        if (!have || d > pivot_degree) {
          pivot = i;
          pivot_degree = d;
          have = true;
        }
      });
      Bitset with = p;
      with.subtract(closed_[pivot]);
      chosen.push_back(pivot);
      search(with, chosen);
      chosen.pop_back();
      Bitset without = p;
      without.reset(pivot);
      search(without, chosen);
    }
    chosen.resize(base);
  }

  VertexSet vertices_;
  std::vector<Bitset> adj_;
  std::vector<Bitset> closed_;
  std::vector<std::size_t> best_;
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g, std::span<const Vertex> s) { return MisSearch(g, s).run(); }

int independence_number(const Graph& g, const TreeDecomposition& td) {
  require_valid(g, td);
  std::size_t best = 0;
  for (const auto& bag : td.bags) {
    if (bag.size() <= best) continue;
    best = std::max(best, maximum_independent_set(g, bag).size());
  }
  return static_cast<int>(best);
}

TreeDecomposition NiceDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  td.nodes = static_cast<int>(nodes.size());
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    td.bags.push_back(nodes[t].bag);
    for (int c : nodes[t].children) td.tree_edges.emplace_back(static_cast<int>(t), c);
  }
  if (root >= 0) td.root = root;
  return td;
}

namespace {

bool subset_of(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

VertexSet difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

NiceDecomposition niceify(const Graph& g, const TreeDecomposition& td) {
  if (g.empty()) throw InputError("niceify: empty graph");
  require_valid(g, td);

  // Contract every tree edge whose one bag contains the other; afterwards the
  // tree has at most n nodes.
  const auto node_count = static_cast<std::size_t>(td.nodes);
  std::vector<std::set<int>> adjacent(node_count);
  for (auto [a, b] : td.tree_edges) {
    adjacent[static_cast<std::size_t>(a)].insert(b);
    adjacent[static_cast<std::size_t>(b)].insert(a);
  }
  std::vector<char> alive(node_count, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < node_count; ++a) {
      if (!alive[a]) continue;
      for (int b : adjacent[a]) {
        if (!subset_of(td.bags[a], td.bags[static_cast<std::size_t>(b)])) continue;
        for (int c : adjacent[a]) {
          if (c == b) continue;
          adjacent[static_cast<std::size_t>(c)].erase(static_cast<int>(a));
          adjacent[static_cast<std::size_t>(c)].insert(b);
          adjacent[static_cast<std::size_t>(b)].insert(c);
        }
        adjacent[static_cast<std::size_t>(b)].erase(static_cast<int>(a));
        adjacent[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }

  int root = -1;
  for (std::size_t t = 0; t < node_count; ++t) {
    if (alive[t] && (root < 0 || td.bags[t] < td.bags[static_cast<std::size_t>(root)])) root = static_cast<int>(t);
  }

  // Postorder of the reduced tree.
  std::vector<int> parent(node_count, -1), order;
  std::vector<int> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    for (int c : adjacent[static_cast<std::size_t>(t)]) {
      if (parent[static_cast<std::size_t>(c)] < 0) {
        parent[static_cast<std::size_t>(c)] = t;
        stack.push_back(c);
      }
    }
  }
  std::reverse(order.begin(), order.end());

  NiceDecomposition nice;
  auto add = [&nice](NodeKind kind, Vertex v, std::vector<int> children, VertexSet bag) {
    nice.nodes.push_back(NiceNode{kind, v, std::move(children), std::move(bag)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };

  std::vector<int> top(node_count, -1);
  for (int t : order) {
    const VertexSet& bag = td.bags[static_cast<std::size_t>(t)];
    std::vector<int> branches;
    for (int c : adjacent[static_cast<std::size_t>(t)]) {
      if (c == parent[static_cast<std::size_t>(t)] || top[static_cast<std::size_t>(c)] < 0) continue;
      int cur = top[static_cast<std::size_t>(c)];
      VertexSet current = td.bags[static_cast<std::size_t>(c)];
      for (Vertex v : difference(current, bag)) {
        current.erase(std::find(current.begin(), current.end(), v));
        cur = add(NodeKind::forget, v, {cur}, current);
      }
      for (Vertex v : difference(bag, current)) {
        current.insert(std::lower_bound(current.begin(), current.end(), v), v);
        cur = add(NodeKind::introduce, v, {cur}, current);
      }
      branches.push_back(cur);
    }
    if (branches.empty() && !bag.empty()) {
      VertexSet current{bag.front()};
      int cur = add(NodeKind::leaf, bag.front(), {}, current);
      for (std::size_t i = 1; i < bag.size(); ++i) {
        current.push_back(bag[i]);
        cur = add(NodeKind::introduce, bag[i], {cur}, current);
      }
      branches.push_back(cur);
    }
    if (branches.empty()) continue;
    int cur = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) cur = add(NodeKind::join, -1, {cur, branches[i]}, bag);
    top[static_cast<std::size_t>(t)] = cur;
  }

  int cur = top[static_cast<std::size_t>(root)];
  VertexSet current = td.bags[static_cast<std::size_t>(root)];
  while (!current.empty()) {
    Vertex v = current.front();
    current.erase(current.begin());
    cur = add(NodeKind::forget, v, {cur}, current);
  }
  nice.root = cur;
  return nice;
}

std::optional<std::string> check_nice_structure(const NiceDecomposition& nice) {
  const auto count = nice.nodes.size();
  if (count == 0) return "no nodes";
  if (nice.root != static_cast<int>(count) - 1) return "root is not the last node";
  if (!nice.nodes[count - 1].bag.empty()) return "root bag is not empty";
  std::vector<int> parents(count, 0);
  for (std::size_t t = 0; t < count; ++t) {
    const auto& node = nice.nodes[t];
    const std::string where = "node " + std::to_string(t) + " (" + node_kind_name(node.kind) + "): ";
    for (int c : node.children) {
      if (c < 0 || static_cast<std::size_t>(c) >= t) return where + "child does not precede parent";
      ++parents[static_cast<std::size_t>(c)];
    }
    switch (node.kind) {
      case NodeKind::leaf:
        if (!node.children.empty() || node.bag != VertexSet{node.vertex}) return where + "leaf must hold exactly its vertex";
        break;
      case NodeKind::introduce: {
        if (node.children.size() != 1) return where + "needs one child";
        VertexSet expect = nice.nodes[static_cast<std::size_t>(node.children[0])].bag;
        if (std::binary_search(expect.begin(), expect.end(), node.vertex)) return where + "vertex already in child";
        expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != node.bag) return where + "bag is not child plus vertex";
        break;
      }
      case NodeKind::forget: {
        if (node.children.size() != 1) return where + "needs one child";
        VertexSet expect = nice.nodes[static_cast<std::size_t>(node.children[0])].bag;
        auto it = std::lower_bound(expect.begin(), expect.end(), node.vertex);
        if (it == expect.end() || *it != node.vertex) return where + "vertex not in child";
        expect.erase(it);
        if (expect != node.bag) return where + "bag is not child minus vertex";
        break;
      }
      case NodeKind::join:
        if (node.children.size() != 2) return where + "needs two children";
        for (int c : node.children) {
          if (nice.nodes[static_cast<std::size_t>(c)].bag != node.bag) return where + "children bags differ";
        }
        break;
    }
  }
  for (std::size_t t = 0; t + 1 < count; ++t) {
    if (parents[t] != 1) return "node " + std::to_string(t) + " has " + std::to_string(parents[t]) + " parents";
  }
  if (parents[count - 1] != 0) return "root has a parent";
  return std::nullopt;
}

TreeDecomposition restrict(const TreeDecomposition& td, std::span<const Vertex> s) {
  VertexSet keep = normalized(VertexSet(s.begin(), s.end()));
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    VertexSet inter;
    std::set_intersection(bag.begin(), bag.end(), keep.begin(), keep.end(), std::back_inserter(inter));
    bag = std::move(inter);
  }
  return out;
}

TreeDecomposition relabel_to_induced(const TreeDecomposition& td, std::span<const Vertex> to_host) {
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    for (auto& v : bag) {
      auto it = std::lower_bound(to_host.begin(), to_host.end(), v);
      if (it == to_host.end() || *it != v) throw InputError("relabel: vertex " + std::to_string(v) + " not in subgraph");
      v = static_cast<Vertex>(it - to_host.begin());
    }
  }
  return out;
}

}  // namespace tinlab
