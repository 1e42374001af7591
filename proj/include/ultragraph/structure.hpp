#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ultragraph/graph.hpp"

namespace ultragraph {

inline bool is_forest(const WeightedGraph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

inline bool is_tree(const WeightedGraph& g) { return is_forest(g) && is_connected(g); }

/// Parts of a complete multipartite graph, or nullopt.
///
/// A graph is complete multipartite exactly when its complement is a disjoint
/// union of cliques, i.e. non-adjacency is transitive. Parts are ordered by
/// first vertex; a graph without edges is one part (k = 1).
inline std::optional<Partition> multipartite_parts(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> part_of(n, n);
  std::vector<std::vector<VertexId>> parts;
  for (VertexId v = 0; v < n; ++v) {
    if (part_of[v] != n) continue;
    std::vector<VertexId> part;
    for (VertexId u = v; u < n; ++u)
      if (u == v || !g.adjacent(u, v)) {
        if (part_of[u] != n) return std::nullopt;
        part_of[u] = parts.size();
        part.push_back(u);
      }
    parts.push_back(std::move(part));
  }
  // Every vertex must be adjacent to exactly the vertices outside its part.
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != n - parts[part_of[v]].size()) return std::nullopt;
    for (const auto& nb : g.neighbors(v))
      if (part_of[nb.vertex] == part_of[v]) return std::nullopt;
  }
  return Partition(std::move(parts), n);
}

/// An induced copy of H: an edge {u, v} plus a vertex p adjacent to neither.
struct InducedH {
  VertexId u;
  VertexId v;
  VertexId p;

  friend bool operator==(const InducedH&, const InducedH&) = default;
};

/// First induced H in edge order, then vertex order for p.
inline std::optional<InducedH> find_induced_H(const WeightedGraph& g) {
  for (const auto& e : g.edges())
    for (VertexId p = 0; p < g.vertex_count(); ++p)
      if (p != e.u && p != e.v && !g.adjacent(p, e.u) && !g.adjacent(p, e.v))
        return InducedH{e.u, e.v, p};
  return std::nullopt;
}

/// Complete bipartite with a singleton part.
inline bool is_star(const WeightedGraph& g) {
  auto parts = multipartite_parts(g);
  if (!parts || parts->size() != 2) return false;
  const auto& a = (*parts)[0];
  const auto& b = (*parts)[1];
  const auto& center = a.size() == 1 ? a : b;
  if (center.size() != 1) return false;
  return is_connected(g) && g.degree(center[0]) == g.vertex_count() - 1;
}

}  // namespace ultragraph
