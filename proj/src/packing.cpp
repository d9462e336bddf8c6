#include "tinlab/packing.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tinlab/errors.hpp"

namespace tinlab {

namespace {

struct Entry {
  VertexSet set;
  Weight value;
  int back[2] = {-1, -1};
};

using Table = std::vector<Entry>;

bool independent_with(const Graph& g, const VertexSet& s, Vertex v) {
  return std::none_of(s.begin(), s.end(), [&](Vertex u) { return g.adjacent(u, v); });
}

}  // namespace

PackingSolution max_weight_independent_set(const Graph& g, const TreeDecomposition& td, int state_cap) {
  PackingSolution solution;
  if (g.empty()) return solution;
  const NiceDecomposition nice = niceify(g, td);
  std::vector<Table> tables(nice.nodes.size());

  auto check_size = [&](const VertexSet& s) {
    if (s.size() > static_cast<std::size_t>(state_cap)) {
      throw ContractViolation("independent bag subset of size " + std::to_string(s.size()) + " exceeds state cap " +
                              std::to_string(state_cap));
    }
    solution.max_state_size = std::max(solution.max_state_size, s.size());
  };

  for (std::size_t t = 0; t < nice.nodes.size(); ++t) {
    const NiceNode& node = nice.nodes[t];
    Table& table = tables[t];
    switch (node.kind) {
      case NodeKind::leaf:
        table.push_back(Entry{{}, 0});
        table.push_back(Entry{{node.vertex}, g.weight(node.vertex)});
        check_size(table.back().set);
        break;
      case NodeKind::introduce: {
        const Table& child = tables[static_cast<std::size_t>(node.children[0])];
        for (std::size_t i = 0; i < child.size(); ++i) {
          table.push_back(Entry{child[i].set, child[i].value, {static_cast<int>(i), -1}});
          if (independent_with(g, child[i].set, node.vertex)) {
            VertexSet grown = child[i].set;
            grown.insert(std::lower_bound(grown.begin(), grown.end(), node.vertex), node.vertex);
            check_size(grown);
            table.push_back(Entry{std::move(grown), child[i].value + g.weight(node.vertex), {static_cast<int>(i), -1}});
          }
        }
        break;
      }
      case NodeKind::forget: {
        const Table& child = tables[static_cast<std::size_t>(node.children[0])];
        std::map<VertexSet, int> index;
        // Entries without v first so that ties keep "not chosen".
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t i = 0; i < child.size(); ++i) {
            const auto& s = child[i].set;
            auto it = std::lower_bound(s.begin(), s.end(), node.vertex);
            bool has_v = it != s.end() && *it == node.vertex;
            if (has_v != (pass == 1)) continue;
            VertexSet reduced = s;
            if (has_v) reduced.erase(reduced.begin() + (it - s.begin()));
            auto [pos, inserted] = index.try_emplace(reduced, static_cast<int>(table.size()));
            if (inserted) {
              table.push_back(Entry{std::move(reduced), child[i].value, {static_cast<int>(i), -1}});
            } else if (child[i].value > table[static_cast<std::size_t>(pos->second)].value) {
              auto& e = table[static_cast<std::size_t>(pos->second)];
              e.value = child[i].value;
              e.back[0] = static_cast<int>(i);
            }
          }
        }
        break;
      }
      case NodeKind::join: {
        const Table& left = tables[static_cast<std::size_t>(node.children[0])];
        const Table& right = tables[static_cast<std::size_t>(node.children[1])];
        std::map<VertexSet, int> right_index;
        for (std::size_t i = 0; i < right.size(); ++i) right_index.emplace(right[i].set, static_cast<int>(i));
        for (std::size_t i = 0; i < left.size(); ++i) {
          auto it = right_index.find(left[i].set);
          if (it == right_index.end()) continue;
          Weight value = left[i].value + right[static_cast<std::size_t>(it->second)].value - g.weight_of(left[i].set);
          table.push_back(Entry{left[i].set, std::move(value), {static_cast<int>(i), it->second}});
        }
        break;
      }
    }
  }

  const Table& root = tables[static_cast<std::size_t>(nice.root)];
  if (root.size() != 1 || !root[0].set.empty()) throw ContractViolation("MWIS root table is not a single empty state");
  solution.total_weight = root[0].value;

  VertexSet chosen;
  std::vector<std::pair<int, int>> stack{{nice.root, 0}};
  while (!stack.empty()) {
    auto [t, e] = stack.back();
    stack.pop_back();
    const Entry& entry = tables[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)];
    chosen.insert(chosen.end(), entry.set.begin(), entry.set.end());
    const NiceNode& node = nice.nodes[static_cast<std::size_t>(t)];
    for (std::size_t c = 0; c < node.children.size(); ++c) stack.emplace_back(node.children[c], entry.back[c]);
  }
  solution.chosen.assign(chosen.begin(), chosen.end());
  normalize(solution.chosen);
  if (g.weight_of(solution.chosen) != solution.total_weight) {
    throw ContractViolation("MWIS traceback weight differs from table optimum");
  }
  return solution;
}

PackingSolution max_weight_independent_packing(const SubgraphFamily& fam, const TreeDecomposition& td, int k_cap) {
  if (k_cap < 1) throw InputError("k_cap must be >= 1");
  require_valid(fam);
  if (fam.members.empty()) return {};
  const int alpha = independence_number(fam.host, td);
  if (alpha > k_cap) {
    throw BudgetError("decomposition independence number " + std::to_string(alpha) + " exceeds k_cap " +
                      std::to_string(k_cap));
  }
  Graph blowup = blowup_graph(fam);
  TreeDecomposition lifted = lift_decomposition(fam, td);
  return max_weight_independent_set(blowup, lifted, k_cap);
}

PackingSolution max_weight_distance_d_packing(const SubgraphFamily& fam, const TreeDecomposition& td, int d, int k_cap) {
  if (d < 1) throw InputError("packing distance must be a positive even integer, got " + std::to_string(d));
  if (d % 2 != 0) {
    throw InputError("distance-" + std::to_string(d) +
                     " packing with odd d is NP-hard already on chordal graphs (independence number 1); only even d "
                     "is supported");
  }
  if (k_cap < 1) throw InputError("k_cap must be >= 1");
  require_valid(fam);
  if (fam.members.empty()) return {};
  const int alpha = independence_number(fam.host, td);
  if (alpha > k_cap) {
    throw BudgetError("decomposition independence number " + std::to_string(alpha) + " exceeds k_cap " +
                      std::to_string(k_cap));
  }
  auto [powered, powered_td] = power_with_decomposition(fam.host, td, d - 1);
  SubgraphFamily rehosted{std::move(powered), fam.members, fam.member_weights};
  Graph blowup = blowup_graph(rehosted);
  TreeDecomposition lifted = lift_decomposition(rehosted, powered_td);
  return max_weight_independent_set(blowup, lifted, k_cap);
}

}  // namespace tinlab
