#include "tinlab/sparse_dp.hpp"

#include <algorithm>
#include <unordered_map>

#include "tinlab/errors.hpp"

namespace tinlab {

std::size_t Boundary::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) count += adjacent(i, j) ? 1 : 0;
  }
  return count;
}

VertexAnnotations::VertexAnnotations(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  if (sets_.size() > 32) throw InputError("at most 32 annotation sets are supported");
  for (auto& s : sets_) normalize(s);
}

std::uint32_t VertexAnnotations::mask(Vertex v) const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (std::binary_search(sets_[i].begin(), sets_[i].end(), v)) m |= std::uint32_t{1} << i;
  }
  return m;
}

namespace {

// One row of Tab[t, (S, X ∩ S, tau)].
struct Entry {
  VertexSet boundary;
  std::vector<char> in_target;
  AlgebraState state;
  Weight value;
  int back[2] = {-1, -1};
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::int32_t>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : key) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

std::vector<std::int32_t> boundary_key(const VertexSet& s, const std::vector<char>& x) {
  std::vector<std::int32_t> key;
  key.reserve(1 + 2 * s.size());
  key.push_back(static_cast<std::int32_t>(s.size()));
  key.insert(key.end(), s.begin(), s.end());
  key.insert(key.end(), x.begin(), x.end());
  return key;
}

std::vector<std::int32_t> full_key(const Entry& e) {
  auto key = boundary_key(e.boundary, e.in_target);
  key.insert(key.end(), e.state.begin(), e.state.end());
  return key;
}

class Table {
 public:
  // Keeps the first entry among equal values so that processing order decides
  // ties deterministically.
  void offer(Entry e) {
    auto [it, inserted] = index_.try_emplace(full_key(e), static_cast<int>(entries_.size()));
    if (inserted) {
      entries_.push_back(std::move(e));
    } else if (e.value > entries_[static_cast<std::size_t>(it->second)].value) {
      entries_[static_cast<std::size_t>(it->second)] = std::move(e);
    }
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  void release_index() { index_.clear(); }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::vector<std::int32_t>, int, KeyHash> index_;
};

class Engine {
 public:
  Engine(const Graph& g, const PropertyAlgebra& algebra, int k_cap, const VertexAnnotations& annotations,
         bool target_mode)
      : g_(g), algebra_(algebra), annotations_(annotations), target_mode_(target_mode) {
    const int r = algebra.chromatic_bound();
    if (r < 1) throw ContractViolation("algebra " + algebra.name() + " reports chromatic bound < 1");
    stats_.boundary_cap = static_cast<std::size_t>(k_cap) * static_cast<std::size_t>(r);
  }

  std::optional<SparseSolution> run(const NiceDecomposition& nice) {
    stats_.nice_nodes = nice.nodes.size();
    std::vector<Table> tables(nice.nodes.size());
    for (std::size_t t = 0; t < nice.nodes.size(); ++t) {
      const NiceNode& node = nice.nodes[t];
      switch (node.kind) {
        case NodeKind::leaf: leaf(node, tables[t]); break;
        case NodeKind::introduce: introduce(node, tables[static_cast<std::size_t>(node.children[0])], tables[t]); break;
        case NodeKind::forget: forget(node, tables[static_cast<std::size_t>(node.children[0])], tables[t]); break;
        case NodeKind::join:
          join(tables[static_cast<std::size_t>(node.children[0])], tables[static_cast<std::size_t>(node.children[1])],
               tables[t]);
          break;
      }
      tables[t].release_index();
      stats_.states += tables[t].entries().size();
    }

    const auto& root = tables[static_cast<std::size_t>(nice.root)].entries();
    int best = -1;
    for (std::size_t i = 0; i < root.size(); ++i) {
      if (!root[i].boundary.empty()) throw ContractViolation("state with nonempty boundary at the root");
      if (!algebra_.accepts(root[i].state)) continue;
      if (best < 0 || root[i].value > root[static_cast<std::size_t>(best)].value) best = static_cast<int>(i);
    }
    if (best < 0) return std::nullopt;

    SparseSolution out;
    out.total_weight = root[static_cast<std::size_t>(best)].value;
    VertexSet f, x;
    std::vector<std::pair<int, int>> stack{{nice.root, best}};
    while (!stack.empty()) {
      auto [t, e] = stack.back();
      stack.pop_back();
      const Entry& entry = tables[static_cast<std::size_t>(t)].entries()[static_cast<std::size_t>(e)];
      for (std::size_t i = 0; i < entry.boundary.size(); ++i) {
        f.push_back(entry.boundary[i]);
        if (entry.in_target[i]) x.push_back(entry.boundary[i]);
      }
      const NiceNode& node = nice.nodes[static_cast<std::size_t>(t)];
      for (std::size_t c = 0; c < node.children.size(); ++c) stack.emplace_back(node.children[c], entry.back[c]);
    }
    out.solution = normalized(std::move(f));
    normalize(x);
    if (target_mode_) {
      if (g_.weight_of(x) != out.total_weight) throw ContractViolation("traceback target weight differs from optimum");
      out.target = std::move(x);
    } else if (g_.weight_of(out.solution) != out.total_weight) {
      throw ContractViolation("traceback weight differs from optimum");
    }
    out.stats = stats_;
    return out;
  }

 private:
  std::vector<bool> target_options() const { return target_mode_ ? std::vector<bool>{false, true} : std::vector<bool>{false}; }

  Weight gain(Vertex v, bool in_target) const { return (!target_mode_ || in_target) ? g_.weight(v) : Weight(0); }

  void admit(Table& table, Entry e) {
    if (e.boundary.size() > stats_.boundary_cap) {
      throw ContractViolation("state boundary of size " + std::to_string(e.boundary.size()) + " exceeds k_cap * r = " +
                              std::to_string(stats_.boundary_cap) + " (algebra " + algebra_.name() + ")");
    }
    if (!algebra_.well_formed(e.state, Boundary(g_, e.boundary, e.in_target))) {
      throw ContractViolation("algebra " + algebra_.name() + " produced a state outside its domain");
    }
    stats_.max_boundary = std::max(stats_.max_boundary, e.boundary.size());
    table.offer(std::move(e));
  }

  Introduction introduction(Vertex v, const VertexSet& boundary, bool in_target) const {
    Introduction in;
    in.vertex = v;
    in.position = static_cast<std::size_t>(std::lower_bound(boundary.begin(), boundary.end(), v) - boundary.begin());
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      if (g_.adjacent(boundary[i], v)) in.neighbors.push_back(i);
    }
    in.in_target = in_target;
    in.target_mode = target_mode_;
    in.annotations = annotations_.mask(v);
    return in;
  }

  void leaf(const NiceNode& node, Table& table) {
    admit(table, Entry{{}, {}, algebra_.empty_state(), 0});
    const VertexSet none;
    const std::vector<char> no_flags;
    for (bool flag : target_options()) {
      Introduction in = introduction(node.vertex, none, flag);
      VertexSet after{node.vertex};
      std::vector<char> after_flags{static_cast<char>(flag)};
      for (auto& st : algebra_.leaf_states(Boundary(g_, none, no_flags), Boundary(g_, after, after_flags), in)) {
        admit(table, Entry{after, after_flags, std::move(st), gain(node.vertex, flag)});
      }
    }
  }

  void introduce(const NiceNode& node, const Table& child, Table& table) {
    const auto& entries = child.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Entry& e = entries[i];
      admit(table, Entry{e.boundary, e.in_target, e.state, e.value, {static_cast<int>(i), -1}});
      for (bool flag : target_options()) {
        Introduction in = introduction(node.vertex, e.boundary, flag);
        VertexSet after = e.boundary;
        std::vector<char> after_flags = e.in_target;
        after.insert(after.begin() + static_cast<std::ptrdiff_t>(in.position), node.vertex);
        after_flags.insert(after_flags.begin() + static_cast<std::ptrdiff_t>(in.position), static_cast<char>(flag));
        auto states = algebra_.introduce(e.state, Boundary(g_, e.boundary, e.in_target), Boundary(g_, after, after_flags), in);
        for (auto& st : states) {
          admit(table, Entry{after, after_flags, std::move(st), e.value + gain(node.vertex, flag), {static_cast<int>(i), -1}});
        }
      }
    }
  }

  void forget(const NiceNode& node, const Table& child, Table& table) {
    const auto& entries = child.entries();
    // Partial solutions without the forgotten vertex go first so that ties
    // resolve to "not chosen".
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        auto it = std::lower_bound(e.boundary.begin(), e.boundary.end(), node.vertex);
        const bool has_v = it != e.boundary.end() && *it == node.vertex;
        if (has_v != (pass == 1)) continue;
        if (!has_v) {
          admit(table, Entry{e.boundary, e.in_target, e.state, e.value, {static_cast<int>(i), -1}});
          continue;
        }
        const auto pos = static_cast<std::size_t>(it - e.boundary.begin());
        auto st = algebra_.forget(e.state, Boundary(g_, e.boundary, e.in_target), pos);
        if (!st) continue;
        VertexSet after = e.boundary;
        std::vector<char> after_flags = e.in_target;
        after.erase(after.begin() + static_cast<std::ptrdiff_t>(pos));
        after_flags.erase(after_flags.begin() + static_cast<std::ptrdiff_t>(pos));
        admit(table, Entry{std::move(after), std::move(after_flags), std::move(*st), e.value, {static_cast<int>(i), -1}});
      }
    }
  }

  void join(const Table& left, const Table& right, Table& table) {
    std::unordered_map<std::vector<std::int32_t>, std::vector<int>, KeyHash> groups;
    const auto& rs = right.entries();
    for (std::size_t j = 0; j < rs.size(); ++j) groups[boundary_key(rs[j].boundary, rs[j].in_target)].push_back(static_cast<int>(j));
    const auto& ls = left.entries();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const Entry& a = ls[i];
      auto it = groups.find(boundary_key(a.boundary, a.in_target));
      if (it == groups.end()) continue;
      Weight shared = 0;
      for (std::size_t p = 0; p < a.boundary.size(); ++p) {
        if (!target_mode_ || a.in_target[p]) shared += g_.weight(a.boundary[p]);
      }
      const Boundary boundary(g_, a.boundary, a.in_target);
      for (int j : it->second) {
        const Entry& b = rs[static_cast<std::size_t>(j)];
        for (auto& st : algebra_.join(a.state, b.state, boundary)) {
          admit(table, Entry{a.boundary, a.in_target, std::move(st), a.value + b.value - shared, {static_cast<int>(i), j}});
        }
      }
    }
  }

  const Graph& g_;
  const PropertyAlgebra& algebra_;
  const VertexAnnotations& annotations_;
  bool target_mode_;
  DpStats stats_;
};

std::optional<SparseSolution> run_engine(const Graph& g, const TreeDecomposition& td, const PropertyAlgebra& algebra,
                                         int k_cap, const VertexAnnotations& annotations, bool target_mode) {
  if (k_cap < 1) throw InputError("k_cap must be >= 1");
  for (const auto& set : annotations.sets()) {
    for (Vertex v : set) {
      if (!g.contains(v)) throw InputError("annotation vertex " + std::to_string(v) + " out of range");
    }
  }
  Engine engine(g, algebra, k_cap, annotations, target_mode);
  if (g.empty()) {
    if (!algebra.accepts(algebra.empty_state())) return std::nullopt;
    SparseSolution out;
    if (target_mode) out.target = VertexSet{};
    out.stats.boundary_cap = static_cast<std::size_t>(k_cap) * static_cast<std::size_t>(algebra.chromatic_bound());
    return out;
  }
  const int alpha = independence_number(g, td);
  if (alpha > k_cap) {
    throw BudgetError("decomposition independence number " + std::to_string(alpha) + " exceeds k_cap " +
                      std::to_string(k_cap));
  }
  return engine.run(niceify(g, td));
}

}  // namespace

std::optional<SparseSolution> solve(const Graph& g, const TreeDecomposition& td, const PropertyAlgebra& algebra,
                                    int k_cap, const VertexAnnotations& annotations) {
  return run_engine(g, td, algebra, k_cap, annotations, false);
}

std::optional<SparseSolution> solve_with_target(const Graph& g, const TreeDecomposition& td,
                                                const PropertyAlgebra& algebra, int k_cap,
                                                const VertexAnnotations& annotations) {
  return run_engine(g, td, algebra, k_cap, annotations, true);
}

}  // namespace tinlab
