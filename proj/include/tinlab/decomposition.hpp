#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tinlab/graph.hpp"

namespace tinlab {

/// Tree plus one bag of host vertices per node.
struct TreeDecomposition {
  int nodes = 0;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<VertexSet> bags;
  std::optional<int> root;

  std::size_t max_bag_size() const;
};

enum class Axiom {
  none,
  malformed,           ///< bag count, node ids or bag vertices out of range
  not_a_tree,          ///< tree_edges do not form a tree on `nodes` nodes
  vertex_uncovered,    ///< some host vertex lies in no bag
  edge_uncovered,      ///< some host edge lies in no bag
  subtree_disconnected ///< nodes containing a vertex do not induce a subtree
};

struct ValidationReport {
  Axiom failed = Axiom::none;
  std::string message;
  /// Witness: vertices for coverage/connectivity failures, node ids for tree
  /// failures. Host vertex ids are 0-based.
  std::vector<int> witness;

  bool ok() const noexcept { return failed == Axiom::none; }
};

const char* axiom_name(Axiom a);

ValidationReport validate(const Graph& g, const TreeDecomposition& td);

/// Throws InputError carrying the report message unless td is valid for g.
void require_valid(const Graph& g, const TreeDecomposition& td);

/// Exact maximum independent set of g[s] by branch and bound with a greedy
/// clique-cover bound. Returned set is sorted.
VertexSet maximum_independent_set(const Graph& g, std::span<const Vertex> s);

/// max over bags of alpha(g[bag]). Throws InputError on an invalid td.
int independence_number(const Graph& g, const TreeDecomposition& td);

enum class NodeKind { leaf, introduce, forget, join };

const char* node_kind_name(NodeKind k);

struct NiceNode {
  NodeKind kind = NodeKind::leaf;
  Vertex vertex = -1;  ///< leaf / introduced / forgotten vertex; -1 for join
  std::vector<int> children;
  VertexSet bag;
};

/// Rooted nice decomposition whose root bag is empty. Nodes are stored so
/// that every child precedes its parent; the root is the last node.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  TreeDecomposition as_tree_decomposition() const;
};

/// Node count of niceify's output is at most kNiceNodeFactor * W * n, with W
/// the largest input bag and n the host order: at most n forgets, 2 W N
/// introduces and 2 N leaves/joins after reducing to N <= n nodes.
inline constexpr std::size_t kNiceNodeFactor = 5;

/// Throws InputError on an empty graph or invalid td. Every output bag is a
/// subset of an input bag.
NiceDecomposition niceify(const Graph& g, const TreeDecomposition& td);

/// Checks the nice-node kinds against bags and tree structure (not the
/// decomposition axioms; use validate(as_tree_decomposition()) for those).
std::optional<std::string> check_nice_structure(const NiceDecomposition& nice);

/// Bags intersected with s; same tree. Valid for induced(g, s) after
/// relabeling through `relabel_to_induced`.
TreeDecomposition restrict(const TreeDecomposition& td, std::span<const Vertex> s);

/// Rewrites bag vertices through the induced-subgraph index map.
TreeDecomposition relabel_to_induced(const TreeDecomposition& td, std::span<const Vertex> to_host);

}  // namespace tinlab
