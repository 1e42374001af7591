#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ultragraph/disjoint_set.hpp"
#include "ultragraph/error.hpp"
#include "ultragraph/graph.hpp"
#include "ultragraph/metrics.hpp"
#include "ultragraph/structure.hpp"

namespace ultragraph {

/// Set of unordered pairs of distinct vertices, stored as (smaller, larger).
class PairSet {
 public:
  using value_type = std::pair<VertexId, VertexId>;

  PairSet() = default;
  PairSet(std::initializer_list<value_type> pairs) {
    for (auto [a, b] : pairs) insert(a, b);
  }

  void insert(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("pair endpoints must differ");
    pairs_.insert(std::minmax(a, b));
  }
  bool contains(VertexId a, VertexId b) const { return pairs_.count(std::minmax(a, b)) > 0; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  bool is_subset_of(const PairSet& other) const {
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
  }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::set<value_type> pairs_;
};

struct ExtendabilityReport {
  bool pseudoultrametrizable = true;
  /// Present iff not pseudoultrametrizable. The closing edge
  /// (last vertex, first vertex) is the cycle's unique heaviest edge.
  std::optional<Cycle> witness;
};

namespace detail {

/// Edge indices grouped by equal weight, groups in ascending weight order.
inline std::vector<std::vector<std::size_t>> weight_levels(const WeightedGraph& g) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.edge(a).weight < g.edge(b).weight; });
  std::vector<std::vector<std::size_t>> levels;
  for (auto e : order) {
    if (levels.empty() || g.edge(levels.back().front()).weight != g.edge(e).weight) levels.emplace_back();
    levels.back().push_back(e);
  }
  return levels;
}

inline std::vector<std::string> cycle_names(const WeightedGraph& g, const Cycle& c) {
  std::vector<std::string> out;
  for (auto v : c.vertices) out.push_back(g.name(v));
  return out;
}

}  // namespace detail

/// Decides whether some pseudoultrametric extends the weight, i.e. whether
/// every cycle carries at least two heaviest edges. An edge e = {u, v} breaks
/// this exactly when u and v are already joined by edges lighter than e; the
/// joining path plus e is then returned as the witness.
inline ExtendabilityReport is_pseudoultrametrizable(const WeightedGraph& g) {
  DisjointSet lighter(g.vertex_count());
  for (const auto& level : detail::weight_levels(g)) {
    for (auto e : level) {
      const Edge& edge = g.edge(e);
      if (!lighter.same(edge.u, edge.v)) continue;
      auto path = bfs_path(strict_threshold_subgraph(g, edge.weight), edge.u, edge.v);
      return {false, Cycle{std::move(path.value().vertices)}};
    }
    for (auto e : level) lighter.unite(g.edge(e).u, g.edge(e).v);
  }
  return {};
}

inline void require_extendable(const WeightedGraph& g) {
  auto report = is_pseudoultrametrizable(g);
  if (!report.pseudoultrametrizable) throw NotExtendableError(detail::cycle_names(g, *report.witness));
}

/// The subdominant pseudoultrametric, which is the greatest extension of the
/// weight on a connected graph. Throws DisconnectedError or NotExtendableError.
inline DistanceMatrix greatest_extension(const WeightedGraph& g) {
  require_connected(g);
  require_extendable(g);
  DistanceMatrix m = subdominant_matrix(g);
  for (const auto& e : g.edges())
    if (m.at(e.u, e.v) != e.weight) throw std::logic_error("subdominant matrix does not extend weight");
  return m;
}

namespace detail {

/// Whether H has vertex-disjoint paths from → to_a and to_b → target.
/// Backtracking over simple paths from `from`; only used when the two
/// endpoints of a candidate edge already share a lighter component.
inline bool disjoint_paths_exist(const WeightedGraph& h, VertexId from, VertexId to_a, VertexId to_b,
                                 VertexId target) {
  const std::size_t n = h.vertex_count();
  std::vector<bool> blocked(n, false);

  auto reachable_avoiding = [&](VertexId s, VertexId t) {
    if (blocked[s] || blocked[t]) return false;
    std::vector<bool> seen(blocked);
    std::vector<VertexId> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      if (queue[head] == t) return true;
      for (const auto& nb : h.neighbors(queue[head]))
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          queue.push_back(nb.vertex);
        }
    }
    return false;
  };

  auto search = [&](auto&& self, VertexId at) -> bool {
    blocked[at] = true;
    bool found = false;
    if (at == to_a) {
      found = reachable_avoiding(to_b, target);
    } else if (reachable_avoiding(to_b, target)) {
      for (const auto& nb : h.neighbors(at))
        if (!blocked[nb.vertex] && self(self, nb.vertex)) {
          found = true;
          break;
        }
    }
    blocked[at] = false;
    return found;
  };
  return search(search, from);
}

/// For each nonadjacent pair outside TM, the weight of the heaviest edge of
/// some path on which that edge is the unique maximum. Pairs in TM (and all
/// adjacent or diagonal pairs) stay nullopt. Row-major n×n.
///
/// A path p…x, {x,y}, y…q has {x,y} as unique maximum iff both subpaths use
/// only lighter edges. When x and y lie in different components of the
/// lighter subgraph, any p in x's component and q in y's component admit such
/// a path (component-internal subpaths cannot share vertices). When they lie in
/// the same component, which only happens for non-extendable weights, the
/// vertex-disjointness is checked by search.
inline std::vector<std::optional<Weight>> unique_max_path_weights(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Weight>> out(n * n);
  auto record = [&](VertexId p, VertexId q, const Weight& w) {
    if (p == q || g.adjacent(p, q) || out[p * n + q]) return;
    out[p * n + q] = w;
    out[q * n + p] = w;
  };

  DisjointSet lighter(n);
  std::vector<std::size_t> shared_component_edges;
  for (const auto& level : weight_levels(g)) {
    std::vector<std::vector<VertexId>> members(n);
    for (VertexId v = 0; v < n; ++v) members[lighter.find(v)].push_back(v);
    for (auto e : level) {
      const Edge& edge = g.edge(e);
      auto cx = lighter.find(edge.u), cy = lighter.find(edge.v);
      if (cx == cy) {
        shared_component_edges.push_back(e);
        continue;
      }
      for (auto p : members[cx])
        for (auto q : members[cy]) record(p, q, edge.weight);
    }
    for (auto e : level) lighter.unite(g.edge(e).u, g.edge(e).v);
  }

  for (auto e : shared_component_edges) {
    const Edge& edge = g.edge(e);
    WeightedGraph h = strict_threshold_subgraph(g, edge.weight);
    for (VertexId p = 0; p < n; ++p)
      for (VertexId q = p + 1; q < n; ++q) {
        if (g.adjacent(p, q) || out[p * n + q]) continue;
        if (disjoint_paths_exist(h, p, edge.u, edge.v, q) || disjoint_paths_exist(h, p, edge.v, edge.u, q))
          record(p, q, edge.weight);
      }
  }
  return out;
}

}  // namespace detail

/// Nonadjacent pairs every connecting path of which carries at least two
/// heaviest edges. Throws DisconnectedError.
inline PairSet tm_pairs(const WeightedGraph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  auto unique_max = detail::unique_max_path_weights(g);
  PairSet out;
  for (VertexId p = 0; p < n; ++p)
    for (VertexId q = p + 1; q < n; ++q)
      if (!g.adjacent(p, q) && !unique_max[p * n + q]) out.insert(p, q);
  return out;
}

/// Nonadjacent pairs joined by a chain of zero-weight edges (on a finite
/// graph, the pairs at subdominant distance zero). Throws DisconnectedError.
inline PairSet wch_pairs(const WeightedGraph& g) {
  require_connected(g);
  DisjointSet zero(g.vertex_count());
  for (const auto& e : g.edges())
    if (e.weight.is_zero()) zero.unite(e.u, e.v);
  PairSet out;
  for (VertexId p = 0; p < g.vertex_count(); ++p)
    for (VertexId q = p + 1; q < g.vertex_count(); ++q)
      if (!g.adjacent(p, q) && zero.same(p, q)) out.insert(p, q);
  return out;
}

/// Least pseudoultrametric extension on a complete k-partite graph (k ≥ 2):
/// edges keep their weight, TM pairs get 0, and every other nonadjacent pair
/// gets the heaviest weight of a path on which that weight is attained once.
/// Throws NotCompleteMultipartite or NotExtendableError.
inline DistanceMatrix least_extension(const WeightedGraph& g) {
  auto parts = multipartite_parts(g);
  if (!parts || parts->size() < 2) {
    std::string detail = parts ? "k = 1" : "";
    if (auto h = find_induced_H(g)) detail = "induced H " + g.name(h->u) + " " + g.name(h->v) + " " + g.name(h->p);
    throw Error(ErrorCode::NotCompleteMultipartite, detail);
  }
  require_extendable(g);
  const std::size_t n = g.vertex_count();
  auto unique_max = detail::unique_max_path_weights(g);
  std::vector<Weight> entries(n * n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      if (auto e = g.edge_between(u, v))
        entries[u * n + v] = g.edge(*e).weight;
      else if (unique_max[u * n + v])
        entries[u * n + v] = *unique_max[u * n + v];
    }
  DistanceMatrix m(g.vertices(), std::move(entries));
  if (!satisfies(m.axiom_class(), AxiomClass::Pseudoultrametric))
    throw std::logic_error("least extension is not a pseudoultrametric");
  return m;
}

/// Whether exactly one pseudoultrametric extends the weight: TM ⊆ WCh.
/// Throws DisconnectedError or NotExtendableError.
inline bool is_unique_extension(const WeightedGraph& g) {
  require_connected(g);
  require_extendable(g);
  return tm_pairs(g).is_subset_of(wch_pairs(g));
}

/// Connects every non-hub component to the hub component by one edge between
/// their first vertices, weighted by that component's constant. `constants`
/// is keyed by component index (as in `connected_components`). Throws
/// BadHubIndex or MissingConstant.
inline WeightedGraph augment(const WeightedGraph& g, std::size_t hub,
                             const std::map<std::size_t, Weight>& constants) {
  auto components = connected_components(g);
  if (hub >= components.size())
    throw Error(ErrorCode::BadHubIndex, std::to_string(hub) + " of " + std::to_string(components.size()));
  for (const auto& [index, value] : constants)
    if (index >= components.size() || index == hub)
      throw Error(ErrorCode::BadHubIndex, "constant given for component " + std::to_string(index));
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const VertexId anchor = components[hub][0];
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i == hub) continue;
    auto it = constants.find(i);
    if (it == constants.end())
      throw Error(ErrorCode::MissingConstant,
                  "component " + std::to_string(i) + " (" + g.name(components[i][0]) + ")");
    edges.push_back({components[i][0], anchor, it->second});
  }
  return WeightedGraph::from_ids(g.vertices(), std::move(edges));
}

}  // namespace ultragraph
