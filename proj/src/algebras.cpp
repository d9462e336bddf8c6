#include "tinlab/algebras.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "tinlab/errors.hpp"

namespace tinlab {

namespace {

class IndependentSetAlgebra final : public PropertyAlgebra {
 public:
  std::string name() const override { return "mwis"; }
  int chromatic_bound() const override { return 1; }

  std::vector<AlgebraState> introduce(const AlgebraState&, const Boundary&, const Boundary&,
                                      const Introduction& in) const override {
    if (in.target_mode && !in.in_target) return {};
    if (!in.neighbors.empty()) return {};
    return {AlgebraState{}};
  }
  std::optional<AlgebraState> forget(const AlgebraState& s, const Boundary&, std::size_t) const override { return s; }
  std::vector<AlgebraState> join(const AlgebraState& a, const AlgebraState&, const Boundary&) const override {
    return {a};
  }
  bool accepts(const AlgebraState&) const override { return true; }
  bool well_formed(const AlgebraState& s, const Boundary&) const override { return s.empty(); }
};

void canonicalize_colors(AlgebraState& colors) {
  std::vector<std::int32_t> relabel;
  std::vector<std::int32_t> seen;
  for (auto& c : colors) {
    auto it = std::find(seen.begin(), seen.end(), c);
    if (it == seen.end()) {
      seen.push_back(c);
      c = static_cast<std::int32_t>(seen.size()) - 1;
    } else {
      c = static_cast<std::int32_t>(it - seen.begin());
    }
  }
}

bool is_canonical(const AlgebraState& labels, std::size_t count) {
  std::int32_t next = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (labels[i] < 0 || labels[i] > next) return false;
    if (labels[i] == next) ++next;
  }
  return true;
}

// Proper colorings of the boundary; modulo color permutation when `quotient`.
// With lists, color c is allowed at v iff annotation bit c is set.
class ColoringAlgebra final : public PropertyAlgebra {
 public:
  ColoringAlgebra(std::string name, int r, bool lists) : name_(std::move(name)), r_(r), lists_(lists) {}

  std::string name() const override { return name_; }
  int chromatic_bound() const override { return r_; }

  std::vector<AlgebraState> introduce(const AlgebraState& s, const Boundary&, const Boundary&,
                                      const Introduction& in) const override {
    if (in.target_mode && !in.in_target) return {};
    std::vector<char> forbidden(static_cast<std::size_t>(r_), 0);
    for (auto p : in.neighbors) forbidden[static_cast<std::size_t>(s[p])] = 1;
    int candidates = r_;
    if (!lists_) {
      // A fresh color stands for every unused one.
      int used = s.empty() ? 0 : *std::max_element(s.begin(), s.end()) + 1;
      candidates = std::min(r_, used + 1);
    }
    std::vector<AlgebraState> out;
    for (int c = 0; c < candidates; ++c) {
      if (forbidden[static_cast<std::size_t>(c)]) continue;
      if (lists_ && !((in.annotations >> c) & 1U)) continue;
      AlgebraState t = s;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(in.position), c);
      if (!lists_) canonicalize_colors(t);
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    }
    return out;
  }

  std::optional<AlgebraState> forget(const AlgebraState& s, const Boundary&, std::size_t position) const override {
    AlgebraState t = s;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(position));
    if (!lists_) canonicalize_colors(t);
    return t;
  }

  std::vector<AlgebraState> join(const AlgebraState& a, const AlgebraState& b, const Boundary&) const override {
    if (a != b) return {};
    return {a};
  }

  bool accepts(const AlgebraState&) const override { return true; }

  bool well_formed(const AlgebraState& s, const Boundary& boundary) const override {
    if (s.size() != boundary.size()) return false;
    if (std::any_of(s.begin(), s.end(), [&](std::int32_t c) { return c < 0 || c >= r_; })) return false;
    return lists_ || is_canonical(s, s.size());
  }

 private:
  std::string name_;
  int r_;
  bool lists_;
};

// State layout: block label per boundary position (first-appearance order),
// then one "holds a forgotten X vertex" flag per block.
class ForestAlgebra final : public PropertyAlgebra {
 public:
  std::string name() const override { return "forest"; }
  int chromatic_bound() const override { return 2; }

  std::vector<AlgebraState> introduce(const AlgebraState& s, const Boundary& before, const Boundary&,
                                      const Introduction& in) const override {
    const std::size_t m = before.size();
    const std::int32_t fresh = block_count(s, m);
    std::vector<std::int32_t> merged;
    for (auto p : in.neighbors) {
      std::int32_t b = s[p];
      // Two neighbours in one block close a cycle through the new vertex.
      if (std::find(merged.begin(), merged.end(), b) != merged.end()) return {};
      merged.push_back(b);
    }
    auto in_merged = [&](std::int32_t b) { return std::find(merged.begin(), merged.end(), b) != merged.end(); };

    std::vector<std::int32_t> marks(s.begin() + static_cast<std::ptrdiff_t>(m), s.end());
    marks.push_back(0);
    int targets = in.in_target ? 1 : 0;
    for (auto b : merged) targets += marks[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < m; ++i) {
      if (in_merged(s[i]) && before.in_target(i)) ++targets;
    }
    if (targets > 1) return {};
    marks[static_cast<std::size_t>(fresh)] = 0;
    for (auto b : merged) marks[static_cast<std::size_t>(fresh)] += marks[static_cast<std::size_t>(b)];

    std::vector<std::int32_t> labels;
    labels.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i) labels.push_back(in_merged(s[i]) ? fresh : s[i]);
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(in.position), fresh);
    return {encode(labels, marks)};
  }

  std::optional<AlgebraState> forget(const AlgebraState& s, const Boundary& before, std::size_t position) const override {
    const std::size_t m = before.size();
    std::vector<std::int32_t> labels(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<std::int32_t> marks(s.begin() + static_cast<std::ptrdiff_t>(m), s.end());
    const std::int32_t b = labels[position];
    const bool block_survives =
        std::count(labels.begin(), labels.end(), b) > 1;
    if (block_survives && before.in_target(position)) marks[static_cast<std::size_t>(b)] += 1;
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(position));
    return encode(labels, marks);
  }

  std::vector<AlgebraState> join(const AlgebraState& a, const AlgebraState& b, const Boundary& boundary) const override {
    const std::size_t m = boundary.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite_blocks = [&](const AlgebraState& s) {
      std::vector<std::size_t> first(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        auto lab = static_cast<std::size_t>(s[i]);
        if (first[lab] == m) first[lab] = i;
        else parent[find(i)] = find(first[lab]);
      }
    };
    unite_blocks(a);
    unite_blocks(b);

    const auto blocks_a = static_cast<std::size_t>(block_count(a, m));
    const auto blocks_b = static_cast<std::size_t>(block_count(b, m));
    std::size_t components = 0;
    for (std::size_t i = 0; i < m; ++i) components += find(i) == i ? 1 : 0;
    // The union of two forests that share exactly the boundary (and its
    // internal edges) is acyclic iff its edge count equals |V| - #components.
    if (components + m != blocks_a + blocks_b + boundary.edge_count()) return {};

    std::vector<std::int32_t> marks(m, 0);
    std::vector<char> counted_a(blocks_a, 0), counted_b(blocks_b, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t root = find(i);
      auto la = static_cast<std::size_t>(a[i]);
      auto lb = static_cast<std::size_t>(b[i]);
      if (!counted_a[la]) {
        counted_a[la] = 1;
        marks[root] += a[m + la];
      }
      if (!counted_b[lb]) {
        counted_b[lb] = 1;
        marks[root] += b[m + lb];
      }
    }
    std::vector<int> load(m, 0);
    for (std::size_t i = 0; i < m; ++i) load[find(i)] += (boundary.in_target(i) ? 1 : 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (find(i) == i && marks[i] + load[i] > 1) return {};
    }
    std::vector<std::int32_t> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = static_cast<std::int32_t>(find(i));
    return {encode(labels, marks)};
  }

  bool accepts(const AlgebraState&) const override { return true; }

  bool well_formed(const AlgebraState& s, const Boundary& boundary) const override {
    const std::size_t m = boundary.size();
    if (s.size() < m || !is_canonical(s, m)) return false;
    const auto blocks = static_cast<std::size_t>(block_count(s, m));
    if (s.size() != m + blocks) return false;
    std::vector<int> load(blocks, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
      if (s[m + b] != 0 && s[m + b] != 1) return false;
      load[b] = s[m + b];
    }
    for (std::size_t i = 0; i < m; ++i) load[static_cast<std::size_t>(s[i])] += boundary.in_target(i) ? 1 : 0;
    return std::all_of(load.begin(), load.end(), [](int x) { return x <= 1; });
  }

 private:
  static std::int32_t block_count(const AlgebraState& s, std::size_t m) {
    std::int32_t count = 0;
    for (std::size_t i = 0; i < m; ++i) count = std::max(count, s[i] + 1);
    return count;
  }

  // Relabels arbitrary block labels by first appearance; marks are indexed by
  // the old labels. Blocks with no boundary member disappear.
  static AlgebraState encode(const std::vector<std::int32_t>& labels, const std::vector<std::int32_t>& marks) {
    AlgebraState out;
    out.reserve(labels.size() * 2);
    std::vector<std::int32_t> order;
    for (auto lab : labels) {
      auto it = std::find(order.begin(), order.end(), lab);
      if (it == order.end()) {
        order.push_back(lab);
        out.push_back(static_cast<std::int32_t>(order.size()) - 1);
      } else {
        out.push_back(static_cast<std::int32_t>(it - order.begin()));
      }
    }
    for (auto lab : order) out.push_back(marks[static_cast<std::size_t>(lab)]);
    return out;
  }
};

int check_colors(int r) {
  if (r < 1 || r > kMaxColors) {
    throw InputError("color count must be in 1.." + std::to_string(kMaxColors) + ", got " + std::to_string(r));
  }
  return r;
}

}  // namespace

std::unique_ptr<PropertyAlgebra> make_independent_set() { return std::make_unique<IndependentSetAlgebra>(); }

std::unique_ptr<PropertyAlgebra> make_forest() { return std::make_unique<ForestAlgebra>(); }

std::unique_ptr<PropertyAlgebra> make_bipartite() { return std::make_unique<ColoringAlgebra>("bipartite", 2, false); }

std::unique_ptr<PropertyAlgebra> make_r_colorable(int r) {
  return std::make_unique<ColoringAlgebra>("color:" + std::to_string(check_colors(r)), r, false);
}

std::unique_ptr<PropertyAlgebra> make_list_colorable(int r) {
  return std::make_unique<ColoringAlgebra>("listcolor:" + std::to_string(check_colors(r)), r, true);
}

VertexAnnotations list_annotations(const std::vector<std::vector<int>>& lists, int r) {
  check_colors(r);
  std::vector<VertexSet> sets(static_cast<std::size_t>(r));
  for (std::size_t v = 0; v < lists.size(); ++v) {
    for (int c : lists[v]) {
      if (c < 0 || c >= r) throw InputError("list color " + std::to_string(c + 1) + " outside 1.." + std::to_string(r));
      sets[static_cast<std::size_t>(c)].push_back(static_cast<Vertex>(v));
    }
  }
  return VertexAnnotations(std::move(sets));
}

std::vector<std::unique_ptr<PropertyAlgebra>> algebra_catalog() {
  std::vector<std::unique_ptr<PropertyAlgebra>> out;
  out.push_back(make_independent_set());
  out.push_back(make_forest());
  out.push_back(make_bipartite());
  out.push_back(make_r_colorable(3));
  out.push_back(make_list_colorable(3));
  return out;
}

std::unique_ptr<PropertyAlgebra> make_algebra(std::string_view spec) {
  if (spec == "mwis") return make_independent_set();
  if (spec == "forest") return make_forest();
  if (spec == "bipartite") return make_bipartite();
  auto parse_r = [&](std::string_view rest) {
    int r = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), r);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw InputError("malformed color count in property '" + std::string(spec) + "'");
    }
    return r;
  };
  if (spec.starts_with("color:")) return make_r_colorable(parse_r(spec.substr(6)));
  if (spec.starts_with("listcolor:")) return make_list_colorable(parse_r(spec.substr(10)));
  throw InputError("unknown property '" + std::string(spec) + "' (expected mwis, forest, bipartite, color:r, listcolor:r)");
}

}  // namespace tinlab
