#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tinlab/decomposition.hpp"
#include "tinlab/graph.hpp"
#include "tinlab/lift.hpp"

// Text formats. Vertices and nodes are 1-indexed on disk and 0-indexed in
// memory. Lines starting with 'c' and blank lines are ignored everywhere.
// Every parser throws ParseError carrying the offending line number.
namespace tinlab::io {

/// `p tw n m`, then m lines `u v`.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

/// n lines `v w` with decimal or p/q weights, each vertex exactly once.
std::vector<Weight> parse_weights(std::string_view text, int n);
std::string write_weights(const Graph& g);

/// `s td N W n`, lines `b i v1 v2 ...`, then tree edges `i j`. W is ignored.
/// When host_order is given, n must equal it.
TreeDecomposition parse_td(std::string_view text, int host_order = -1);
std::string write_td(const TreeDecomposition& td, int host_order);

/// `f J`, then J lines `h w: v1 v2 ...`.
SubgraphFamily parse_family(std::string_view text, const Graph& host);
std::string write_family(const SubgraphFamily& fam);

/// Lines `v c1 c2 ...` with 1-based colors; returns 0-based color lists.
/// Vertices without a line get an empty list.
std::vector<std::vector<int>> parse_lists(std::string_view text, int n);

/// `x v1 v2 ...` on one line.
VertexSet parse_vertex_set(std::string_view text, int n);
std::string write_vertex_set(const VertexSet& s);

/// Throws InputError when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace tinlab::io
