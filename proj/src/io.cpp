#include "tinlab/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tinlab/errors.hpp"

namespace tinlab::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Content lines with their 1-based numbers; comments and blanks dropped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens[0][0] != 'c') out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

long long to_int(const Line& line, std::string_view token, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line.number, std::string("expected integer ") + what + ", got '" + std::string(token) + "'");
  }
  return v;
}

int to_index(const Line& line, std::string_view token, long long limit, const char* what) {
  long long v = to_int(line, token, what);
  if (v < 1 || v > limit) {
    throw ParseError(line.number, std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(limit));
  }
  return static_cast<int>(v - 1);
}

int to_count(const Line& line, std::string_view token, const char* what) {
  long long v = to_int(line, token, what);
  if (v < 0 || v > 100000000) throw ParseError(line.number, std::string(what) + " out of range");
  return static_cast<int>(v);
}

Weight to_weight(const Line& line, std::string_view token) {
  try {
    return parse_weight(token);
  } catch (const InputError& e) {
    throw ParseError(line.number, e.what());
  }
}

void expect_tokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) throw ParseError(line.number, std::string("expected '") + shape + "'");
}

const Line& header(const std::vector<Line>& lines, const char* shape) {
  if (lines.empty()) throw ParseError(0, std::string("missing header '") + shape + "'");
  return lines[0];
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  const Line& h = header(lines, "p tw n m");
  if (h.tokens.size() != 4 || h.tokens[0] != "p" || h.tokens[1] != "tw") {
    throw ParseError(h.number, "expected header 'p tw n m'");
  }
  const int n = to_count(h, h.tokens[2], "vertex count");
  const int m = to_count(h, h.tokens[3], "edge count");
  if (lines.size() - 1 != static_cast<std::size_t>(m)) {
    throw ParseError(lines.size() > static_cast<std::size_t>(m) + 1 ? lines[static_cast<std::size_t>(m) + 1].number : 0,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_tokens(line, 2, "u v");
    Vertex u = to_index(line, line.tokens[0], n, "vertex");
    Vertex v = to_index(line, line.tokens[1], n, "vertex");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u + 1));
    auto& row = adjacency[static_cast<std::size_t>(u)];
    if (std::find(row.begin(), row.end(), v) != row.end()) {
      throw ParseError(line.number, "parallel edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    }
    row.push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  return Graph::from_adjacency(std::move(adjacency));
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::vector<Weight> parse_weights(std::string_view text, int n) {
  std::vector<Weight> weights(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const Line& line : content_lines(text)) {
    expect_tokens(line, 2, "v w");
    Vertex v = to_index(line, line.tokens[0], n, "vertex");
    if (seen[static_cast<std::size_t>(v)]) throw ParseError(line.number, "second weight for vertex " + std::to_string(v + 1));
    seen[static_cast<std::size_t>(v)] = 1;
    weights[static_cast<std::size_t>(v)] = to_weight(line, line.tokens[1]);
  }
  auto missing = std::find(seen.begin(), seen.end(), 0);
  if (missing != seen.end()) {
    throw ParseError(0, "no weight for vertex " + std::to_string(missing - seen.begin() + 1));
  }
  return weights;
}

std::string write_weights(const Graph& g) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.order(); ++v) out << v + 1 << ' ' << format_weight(g.weight(v)) << '\n';
  return out.str();
}

TreeDecomposition parse_td(std::string_view text, int host_order) {
  auto lines = content_lines(text);
  const Line& h = header(lines, "s td N W n");
  if (h.tokens.size() != 5 || h.tokens[0] != "s" || h.tokens[1] != "td") {
    throw ParseError(h.number, "expected header 's td N W n'");
  }
  TreeDecomposition td;
  td.nodes = to_count(h, h.tokens[2], "node count");
  to_count(h, h.tokens[3], "bag width");
  const int n = to_count(h, h.tokens[4], "vertex count");
  if (host_order >= 0 && n != host_order) {
    throw ParseError(h.number, "decomposition is over " + std::to_string(n) + " vertices, graph has " +
                                   std::to_string(host_order));
  }
  td.bags.resize(static_cast<std::size_t>(td.nodes));
  std::vector<char> seen(static_cast<std::size_t>(td.nodes), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "b") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "expected 'b i v1 v2 ...'");
      int node = to_index(line, line.tokens[1], td.nodes, "node");
      if (seen[static_cast<std::size_t>(node)]) throw ParseError(line.number, "duplicate bag line for node " + std::to_string(node + 1));
      seen[static_cast<std::size_t>(node)] = 1;
      VertexSet bag;
      for (std::size_t k = 2; k < line.tokens.size(); ++k) bag.push_back(to_index(line, line.tokens[k], n, "vertex"));
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line.number, "vertex repeated in bag " + std::to_string(node + 1));
      }
      td.bags[static_cast<std::size_t>(node)] = std::move(bag);
    } else {
      expect_tokens(line, 2, "i j");
      int a = to_index(line, line.tokens[0], td.nodes, "node");
      int b = to_index(line, line.tokens[1], td.nodes, "node");
      td.tree_edges.emplace_back(a, b);
    }
  }
  auto missing = std::find(seen.begin(), seen.end(), 0);
  if (missing != seen.end()) throw ParseError(0, "no bag line for node " + std::to_string(missing - seen.begin() + 1));
  return td;
}

std::string write_td(const TreeDecomposition& td, int host_order) {
  std::ostringstream out;
  out << "s td " << td.nodes << ' ' << td.max_bag_size() << ' ' << host_order << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

SubgraphFamily parse_family(std::string_view text, const Graph& host) {
  auto lines = content_lines(text);
  const Line& h = header(lines, "f J");
  if (h.tokens.size() != 2 || h.tokens[0] != "f") throw ParseError(h.number, "expected header 'f J'");
  const int j = to_count(h, h.tokens[1], "member count");
  if (lines.size() - 1 != static_cast<std::size_t>(j)) {
    throw ParseError(0, "header declares " + std::to_string(j) + " members, found " + std::to_string(lines.size() - 1));
  }
  SubgraphFamily fam{host, {}, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "h") throw ParseError(line.number, "expected 'h w: v1 v2 ...'");
    // The weight ends at the first ':', which may be glued to either token.
    std::string weight_text;
    std::size_t k = 1;
    bool closed = false;
    for (; k < line.tokens.size() && !closed; ++k) {
      std::string_view tok = line.tokens[k];
      auto colon = tok.find(':');
      if (colon != std::string_view::npos) {
        if (colon + 1 != tok.size()) throw ParseError(line.number, "expected whitespace after ':'");
        weight_text += tok.substr(0, colon);
        closed = true;
      } else {
        weight_text += tok;
      }
    }
    if (!closed || weight_text.empty()) throw ParseError(line.number, "expected 'h w: v1 v2 ...'");
    fam.member_weights.push_back(to_weight(line, weight_text));
    VertexSet member;
    for (; k < line.tokens.size(); ++k) member.push_back(to_index(line, line.tokens[k], host.order(), "vertex"));
    std::sort(member.begin(), member.end());
    if (member.empty()) throw ParseError(line.number, "empty family member");
    if (std::adjacent_find(member.begin(), member.end()) != member.end()) {
      throw ParseError(line.number, "vertex repeated in family member");
    }
    fam.members.push_back(std::move(member));
  }
  try {
    require_valid(fam);
  } catch (const InputError& e) {
    throw ParseError(0, e.what());
  }
  return fam;
}

std::string write_family(const SubgraphFamily& fam) {
  std::ostringstream out;
  out << "f " << fam.members.size() << '\n';
  for (std::size_t j = 0; j < fam.members.size(); ++j) {
    out << "h " << format_weight(fam.member_weights[j]) << ':';
    for (Vertex v : fam.members[j]) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> parse_lists(std::string_view text, int n) {
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const Line& line : content_lines(text)) {
    Vertex v = to_index(line, line.tokens[0], n, "vertex");
    if (seen[static_cast<std::size_t>(v)]) throw ParseError(line.number, "second list for vertex " + std::to_string(v + 1));
    seen[static_cast<std::size_t>(v)] = 1;
    auto& list = lists[static_cast<std::size_t>(v)];
    for (std::size_t k = 1; k < line.tokens.size(); ++k) {
      long long c = to_int(line, line.tokens[k], "color");
      if (c < 1 || c > 32) throw ParseError(line.number, "color " + std::to_string(c) + " outside 1..32");
      list.push_back(static_cast<int>(c - 1));
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return lists;
}

VertexSet parse_vertex_set(std::string_view text, int n) {
  auto lines = content_lines(text);
  if (lines.size() != 1 || lines[0].tokens[0] != "x") throw ParseError(lines.empty() ? 0 : lines[0].number, "expected one line 'x v1 v2 ...'");
  VertexSet s;
  for (std::size_t k = 1; k < lines[0].tokens.size(); ++k) s.push_back(to_index(lines[0], lines[0].tokens[k], n, "vertex"));
  return normalized(std::move(s));
}

std::string write_vertex_set(const VertexSet& s) {
  std::ostringstream out;
  out << 'x';
  for (Vertex v : s) out << ' ' << v + 1;
  out << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("cannot write " + path);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw ContractViolation("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

}  // namespace tinlab::io
