#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ultragraph/disjoint_set.hpp"
#include "ultragraph/error.hpp"
#include "ultragraph/graph.hpp"
#include "ultragraph/weight.hpp"

namespace ultragraph {

/// Axiom classes, from weakest to strongest. Metric and pseudoultrametric are
/// incomparable; ultrametric implies every other class.
enum class AxiomClass { None, Pseudometric, Metric, Pseudoultrametric, Ultrametric };

inline std::string_view to_string(AxiomClass c) {
  switch (c) {
    case AxiomClass::None: return "none";
    case AxiomClass::Pseudometric: return "pseudometric";
    case AxiomClass::Metric: return "metric";
    case AxiomClass::Pseudoultrametric: return "pseudoultrametric";
    case AxiomClass::Ultrametric: return "ultrametric";
  }
  return "none";
}

inline std::optional<AxiomClass> axiom_class_from_string(std::string_view s) {
  for (auto c : {AxiomClass::None, AxiomClass::Pseudometric, AxiomClass::Metric,
                 AxiomClass::Pseudoultrametric, AxiomClass::Ultrametric})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

/// Whether a matrix of class `have` also belongs to class `target`.
inline bool satisfies(AxiomClass have, AxiomClass target) {
  switch (target) {
    case AxiomClass::None: return true;
    case AxiomClass::Pseudometric: return have != AxiomClass::None;
    case AxiomClass::Metric: return have == AxiomClass::Metric || have == AxiomClass::Ultrametric;
    case AxiomClass::Pseudoultrametric:
      return have == AxiomClass::Pseudoultrametric || have == AxiomClass::Ultrametric;
    case AxiomClass::Ultrametric: return have == AxiomClass::Ultrametric;
  }
  return false;
}

struct Violation {
  enum class Kind { Asymmetric, NonzeroDiagonal, ZeroOffDiagonal, Triangle, StrongTriangle };
  Kind kind;
  // Asymmetric / ZeroOffDiagonal: (x, y). NonzeroDiagonal: x.
  // Triangle kinds: d(x,y) exceeds the bound through z.
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
};

struct Verdict {
  std::optional<Violation> violation;

  bool passed() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

namespace detail {

inline const Weight& at(std::span<const Weight> entries, std::size_t n, std::size_t i, std::size_t j) {
  return entries[i * n + j];
}

/// All-pairs maximum edge weight along the unique paths of a forest.
/// Pairs in different trees are left as nullopt.
inline std::vector<std::optional<Weight>> forest_path_maxima(
    std::size_t n, const std::vector<std::vector<std::pair<std::size_t, Weight>>>& forest) {
  std::vector<std::optional<Weight>> out(n * n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    out[s * n + s] = Weight(0);
    stack.assign(1, s);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& [y, w] : forest[x]) {
        if (out[s * n + y]) continue;
        const Weight& through = *out[s * n + x];
        out[s * n + y] = through < w ? w : through;
        stack.push_back(y);
      }
    }
  }
  return out;
}

/// Minimax closure of a square matrix read as a complete graph: Prim's tree
/// then tree-path maxima. A symmetric matrix with zero diagonal is a
/// pseudoultrametric exactly when it equals this closure.
inline std::vector<Weight> minimax_closure(std::span<const Weight> entries, std::size_t n) {
  std::vector<std::vector<std::pair<std::size_t, Weight>>> tree(n);
  std::vector<bool> in_tree(n, false);
  std::vector<std::optional<Weight>> best(n);
  std::vector<std::size_t> best_from(n, 0);
  best[0] = Weight(0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in_tree[v] && best[v] && (pick == n || *best[v] < *best[pick])) pick = v;
    in_tree[pick] = true;
    if (step > 0) {
      tree[pick].emplace_back(best_from[pick], *best[pick]);
      tree[best_from[pick]].emplace_back(pick, *best[pick]);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const Weight& w = at(entries, n, pick, v);
      if (!best[v] || w < *best[v]) {
        best[v] = w;
        best_from[v] = pick;
      }
    }
  }
  auto maxima = forest_path_maxima(n, tree);
  std::vector<Weight> out;
  out.reserve(n * n);
  for (auto& m : maxima) out.push_back(std::move(*m));
  return out;
}

inline std::optional<Violation> find_structural_violation(std::span<const Weight> entries,
                                                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!at(entries, n, i, i).is_zero()) return Violation{Violation::Kind::NonzeroDiagonal, i, i, i};
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(entries, n, i, j) != at(entries, n, j, i))
        return Violation{Violation::Kind::Asymmetric, i, j, 0};
  }
  return std::nullopt;
}

inline std::optional<Violation> find_zero_off_diagonal(std::span<const Weight> entries,
                                                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(entries, n, i, j).is_zero()) return Violation{Violation::Kind::ZeroOffDiagonal, i, j, 0};
  return std::nullopt;
}

inline std::optional<Violation> find_triangle_violation(std::span<const Weight> entries,
                                                        std::size_t n) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (at(entries, n, x, z) + at(entries, n, z, y) < at(entries, n, x, y))
          return Violation{Violation::Kind::Triangle, x, y, z};
      }
  return std::nullopt;
}

inline std::optional<Violation> find_strong_triangle_violation(std::span<const Weight> entries,
                                                               std::size_t n) {
  if (n < 3) return std::nullopt;
  auto closure = minimax_closure(entries, n);
  if (std::equal(closure.begin(), closure.end(), entries.begin())) return std::nullopt;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (std::max(at(entries, n, x, z), at(entries, n, z, y)) < at(entries, n, x, y))
          return Violation{Violation::Kind::StrongTriangle, x, y, z};
      }
  return std::nullopt;
}

}  // namespace detail

/// Checks a row-major n×n matrix against `target`. Fails with the first
/// witness found: asymmetric pair, nonzero diagonal entry, zero off-diagonal
/// entry (metric/ultrametric targets), or a violating triple.
inline Verdict validate(std::span<const Weight> entries, std::size_t n, AxiomClass target) {
  if (target == AxiomClass::None) return {};
  if (auto v = detail::find_structural_violation(entries, n)) return {v};
  if (target == AxiomClass::Metric || target == AxiomClass::Ultrametric)
    if (auto v = detail::find_zero_off_diagonal(entries, n)) return {v};
  if (target == AxiomClass::Pseudoultrametric || target == AxiomClass::Ultrametric)
    return {detail::find_strong_triangle_violation(entries, n)};
  return {detail::find_triangle_violation(entries, n)};
}

inline AxiomClass classify(std::span<const Weight> entries, std::size_t n) {
  if (detail::find_structural_violation(entries, n)) return AxiomClass::None;
  const bool positive = !detail::find_zero_off_diagonal(entries, n);
  if (!detail::find_strong_triangle_violation(entries, n))
    return positive ? AxiomClass::Ultrametric : AxiomClass::Pseudoultrametric;
  if (!detail::find_triangle_violation(entries, n))
    return positive ? AxiomClass::Metric : AxiomClass::Pseudometric;
  return AxiomClass::None;
}

/// Symmetric matrix with zero diagonal over an ordered vertex list, tagged
/// with the strongest axiom class its entries satisfy.
class DistanceMatrix {
 public:
  /// Throws InvalidMatrix if the shape is wrong, the diagonal is nonzero, or
  /// the entries are asymmetric.
  DistanceMatrix(std::vector<std::string> vertices, std::vector<Weight> entries)
      : vertices_(std::move(vertices)), entries_(std::move(entries)) {
    const std::size_t n = vertices_.size();
    if (n == 0 || entries_.size() != n * n)
      throw Error(ErrorCode::InvalidMatrix, "matrix must be a nonempty square over its vertices");
    if (auto v = detail::find_structural_violation(entries_, n)) {
      if (v->kind == Violation::Kind::NonzeroDiagonal)
        throw Error(ErrorCode::InvalidMatrix, "nonzero diagonal at " + vertices_[v->x]);
      throw Error(ErrorCode::InvalidMatrix, "asymmetric at " + vertices_[v->x] + " " + vertices_[v->y]);
    }
    class_ = classify(entries_, n);
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::span<const Weight> entries() const noexcept { return entries_; }
  const Weight& at(std::size_t i, std::size_t j) const { return entries_.at(i * size() + j); }
  AxiomClass axiom_class() const noexcept { return class_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  const Weight& at(std::string_view a, std::string_view b) const {
    auto i = index_of(a), j = index_of(b);
    if (!i || !j) throw Error(ErrorCode::UnknownVertex, std::string(i ? b : a));
    return at(*i, *j);
  }

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.vertices_ == b.vertices_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Weight> entries_;
  AxiomClass class_ = AxiomClass::None;
};

inline Verdict validate(const DistanceMatrix& m, AxiomClass target) {
  return validate(m.entries(), m.size(), target);
}

enum class PartialOrder { Equal, FirstLess, SecondLess, Incomparable };

inline std::string_view to_string(PartialOrder p) {
  switch (p) {
    case PartialOrder::Equal: return "equal";
    case PartialOrder::FirstLess: return "first-less";
    case PartialOrder::SecondLess: return "second-less";
    case PartialOrder::Incomparable: return "incomparable";
  }
  return "incomparable";
}

/// Entrywise order: `FirstLess` means a ⪯ b and a ≠ b.
inline PartialOrder compare(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.vertices() != b.vertices()) throw Error(ErrorCode::VertexMismatch, "matrices have different vertex lists");
  bool some_less = false, some_greater = false;
  auto ea = a.entries(), eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] < eb[i]) some_less = true;
    if (eb[i] < ea[i]) some_greater = true;
  }
  if (some_less && some_greater) return PartialOrder::Incomparable;
  if (some_less) return PartialOrder::FirstLess;
  if (some_greater) return PartialOrder::SecondLess;
  return PartialOrder::Equal;
}

inline bool precedes_or_equal(const DistanceMatrix& a, const DistanceMatrix& b) {
  auto r = compare(a, b);
  return r == PartialOrder::Equal || r == PartialOrder::FirstLess;
}

/// Kruskal. `tie_order`, if given, is a permutation of edge indices used to
/// break ties between equal weights; otherwise edges tie by index.
inline std::vector<std::size_t> minimum_spanning_forest(const WeightedGraph& g,
                                                        std::span<const std::size_t> tie_order = {}) {
  std::vector<std::size_t> rank(g.edge_count());
  if (tie_order.empty())
    std::iota(rank.begin(), rank.end(), std::size_t{0});
  else
    for (std::size_t i = 0; i < tie_order.size(); ++i) rank[tie_order[i]] = i;
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& wa = g.edge(a).weight;
    const auto& wb = g.edge(b).weight;
    if (wa != wb) return wa < wb;
    return rank[a] < rank[b];
  });
  DisjointSet dsu(g.vertex_count());
  std::vector<std::size_t> tree;
  for (auto e : order)
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  return tree;
}

/// Matrix of maximum edge weights along paths of the given spanning tree.
inline DistanceMatrix tree_bottleneck_matrix(const WeightedGraph& g, std::span<const std::size_t> tree_edges) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, Weight>>> forest(n);
  for (auto e : tree_edges) {
    const auto& edge = g.edge(e);
    forest[edge.u].emplace_back(edge.v, edge.weight);
    forest[edge.v].emplace_back(edge.u, edge.weight);
  }
  auto maxima = detail::forest_path_maxima(n, forest);
  std::vector<Weight> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    if (!maxima[i]) throw DisconnectedError(g.name(i / n), g.name(i % n));
    entries.push_back(std::move(*maxima[i]));
  }
  return DistanceMatrix(g.vertices(), std::move(entries));
}

/// Subdominant pseudoultrametric: for u ≠ v, the least over u–v paths of the
/// heaviest edge on the path. Computed as bottlenecks on a minimum spanning
/// tree. Throws DisconnectedError.
inline DistanceMatrix subdominant_matrix(const WeightedGraph& g) {
  require_connected(g);
  return tree_bottleneck_matrix(g, minimum_spanning_forest(g));
}

/// Shortest-path pseudometric (Floyd–Warshall over exact weights).
/// Throws DisconnectedError.
inline DistanceMatrix shortest_path_matrix(const WeightedGraph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Weight>> d(n * n);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Weight(0);
  for (const auto& e : g.edges()) {
    d[e.u * n + e.v] = e.weight;
    d[e.v * n + e.u] = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k * n + j]) continue;
        Weight through = *d[i * n + k] + *d[k * n + j];
        auto& cur = d[i * n + j];
        if (!cur || through < *cur) cur = std::move(through);
      }
    }
  std::vector<Weight> entries;
  entries.reserve(n * n);
  for (auto& x : d) entries.push_back(std::move(*x));
  return DistanceMatrix(g.vertices(), std::move(entries));
}

/// Complete graph with w({x,y}) = m(x,y).
inline WeightedGraph matrix_to_complete_graph(const DistanceMatrix& m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) edges.push_back({i, j, m.at(i, j)});
  return WeightedGraph::from_ids(m.vertices(), std::move(edges));
}

struct Quotient {
  Partition classes;      // zero-distance classes, ordered by first member
  DistanceMatrix matrix;  // ultrametric over the classes
};

/// Collapses zero-distance classes of a pseudoultrametric. Each class is
/// labelled by its member names, sorted and joined with '|'.
inline Quotient quotient(const DistanceMatrix& m) {
  if (!satisfies(m.axiom_class(), AxiomClass::Pseudoultrametric))
    throw Error(ErrorCode::NotPseudoultrametric, std::string(to_string(m.axiom_class())));
  const std::size_t n = m.size();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<VertexId>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<VertexId> block;
    for (std::size_t j = i; j < n; ++j)
      if (!assigned[j] && m.at(i, j).is_zero()) {
        assigned[j] = true;
        block.push_back(j);
      }
    blocks.push_back(std::move(block));
  }
  std::vector<std::string> labels;
  for (const auto& block : blocks) {
    std::vector<std::string> names;
    for (auto v : block) names.push_back(m.vertices()[v]);
    std::sort(names.begin(), names.end());
    std::string label;
    for (std::size_t i = 0; i < names.size(); ++i) label += (i ? "|" : "") + names[i];
    labels.push_back(std::move(label));
  }
  const std::size_t k = blocks.size();
  std::vector<Weight> entries;
  entries.reserve(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) entries.push_back(m.at(blocks[a][0], blocks[b][0]));
  Partition classes(std::move(blocks), n);
  return {std::move(classes), DistanceMatrix(std::move(labels), std::move(entries))};
}

struct DendrogramNode {
  Weight height;
  std::vector<std::size_t> children;  // node indices; empty for leaves
  std::optional<std::size_t> leaf;    // matrix row for leaves
};

/// Rooted merge tree of a finite ultrametric: the distance between two leaves
/// is twice the height of their lowest common ancestor.
class Dendrogram {
 public:
  Dendrogram(std::vector<std::string> labels, std::vector<DendrogramNode> nodes, std::size_t root)
      : labels_(std::move(labels)), nodes_(std::move(nodes)), root_(root) {}

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<DendrogramNode>& nodes() const noexcept { return nodes_; }
  const DendrogramNode& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t root() const noexcept { return root_; }

  /// Matrix rows of the leaves below `node`, ascending.
  std::vector<std::size_t> leaves_under(std::size_t node) const {
    std::vector<std::size_t> out, stack{node};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (nodes_[x].leaf) out.push_back(*nodes_[x].leaf);
      for (auto c : nodes_[x].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Reconstructs the ultrametric encoded by the tree.
  DistanceMatrix to_matrix() const {
    const std::size_t n = labels_.size();
    std::vector<Weight> entries(n * n);
    for (const auto& node : nodes_) {
      std::vector<std::vector<std::size_t>> groups;
      for (auto c : node.children) groups.push_back(leaves_under(c));
      Weight d = node.height + node.height;
      for (std::size_t a = 0; a < groups.size(); ++a)
        for (std::size_t b = a + 1; b < groups.size(); ++b)
          for (auto x : groups[a])
            for (auto y : groups[b]) entries[x * n + y] = entries[y * n + x] = d;
    }
    return DistanceMatrix(labels_, std::move(entries));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<DendrogramNode> nodes_;
  std::size_t root_;
};

/// Single-linkage agglomeration of an ultrametric. Clusters that join at the
/// same distance become one multiway node at height distance/2.
inline Dendrogram dendrogram(const DistanceMatrix& m) {
  if (m.axiom_class() != AxiomClass::Ultrametric)
    throw Error(ErrorCode::NotUltrametric, std::string(to_string(m.axiom_class())));
  const std::size_t n = m.size();
  std::vector<DendrogramNode> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({Weight(0), {}, i});

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return m.at(a.first, a.second) < m.at(b.first, b.second);
  });

  DisjointSet dsu(n);
  std::vector<std::size_t> node_of(n);
  std::iota(node_of.begin(), node_of.end(), std::size_t{0});
  for (std::size_t lo = 0; lo < pairs.size();) {
    const Weight& level = m.at(pairs[lo].first, pairs[lo].second);
    std::size_t hi = lo;
    while (hi < pairs.size() && m.at(pairs[hi].first, pairs[hi].second) == level) ++hi;

    std::vector<std::size_t> touched;
    for (std::size_t p = lo; p < hi; ++p) {
      auto a = dsu.find(pairs[p].first), b = dsu.find(pairs[p].second);
      if (a != b) {
        touched.push_back(a);
        touched.push_back(b);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<std::size_t> old_nodes(n);
    for (auto r : touched) old_nodes[r] = node_of[r];
    for (std::size_t p = lo; p < hi; ++p) dsu.unite(pairs[p].first, pairs[p].second);

    std::map<std::size_t, std::vector<std::size_t>> merged;
    for (auto r : touched) merged[dsu.find(r)].push_back(old_nodes[r]);
    for (auto& [root, children] : merged) {
      std::sort(children.begin(), children.end());
      nodes.push_back({level / 2, std::move(children), std::nullopt});
      node_of[root] = nodes.size() - 1;
    }
    lo = hi;
  }
  return Dendrogram(m.vertices(), std::move(nodes), node_of[dsu.find(0)]);
}

/// Either a finite exponent α ≥ 1 or the infinite sentinel.
class ExtendedExponent {
 public:
  static ExtendedExponent infinite() { return ExtendedExponent(std::nullopt); }
  static ExtendedExponent finite(double value) { return ExtendedExponent(value); }

  bool is_infinite() const noexcept { return !value_; }
  /// Finite value; throws std::bad_optional_access for the sentinel.
  double value() const { return value_.value(); }

  friend bool operator==(const ExtendedExponent&, const ExtendedExponent&) = default;

 private:
  explicit ExtendedExponent(std::optional<double> v) : value_(v) {}
  std::optional<double> value_;
};

namespace detail {

/// Supremum α with a^α ≤ b^α + c^α for a > b ≥ c > 0 and a ≤ b + c.
inline double triple_exponent(const Weight& a, const Weight& b, const Weight& c, double tolerance) {
  if (a == b + c) return 1.0;
  const double rb = Weight(b.value() / a.value()).to_double();
  const double rc = Weight(c.value() / a.value()).to_double();
  auto excess = [&](double alpha) { return std::pow(rb, alpha) + std::pow(rc, alpha) - 1.0; };
  double lo = 1.0, hi = 2.0;
  while (excess(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tolerance) {
    double mid = lo + (hi - lo) / 2.0;
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2.0;
}

}  // namespace detail

/// Supremum of α ≥ 1 for which the entrywise α-th power is still a
/// (pseudo)metric. Infinite exactly when no triple constrains α, i.e. when
/// the matrix is a pseudoultrametric. Throws NotPseudometric.
inline ExtendedExponent betweenness_exponent(const DistanceMatrix& m, double tolerance = 1e-9) {
  if (!satisfies(m.axiom_class(), AxiomClass::Pseudometric))
    throw Error(ErrorCode::NotPseudometric, std::string(to_string(m.axiom_class())));
  const std::size_t n = m.size();
  std::optional<double> best;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<const Weight*, 3> s{&m.at(i, j), &m.at(j, k), &m.at(i, k)};
        std::sort(s.begin(), s.end(), [](const Weight* x, const Weight* y) { return *y < *x; });
        const Weight &a = *s[0], &b = *s[1], &c = *s[2];
        // a == b leaves every power satisfied; c == 0 forces a == b.
        if (!(b < a) || c.is_zero()) continue;
        double alpha = detail::triple_exponent(a, b, c, tolerance);
        if (!best || alpha < *best) best = alpha;
      }
  return best ? ExtendedExponent::finite(*best) : ExtendedExponent::infinite();
}

}  // namespace ultragraph
