#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ultragraph/disjoint_set.hpp"
#include "ultragraph/error.hpp"
#include "ultragraph/weight.hpp"

namespace ultragraph {

using VertexId = std::size_t;

/// Undirected edge, stored with `u < v`.
struct Edge {
  VertexId u;
  VertexId v;
  Weight weight;
};

/// Edge given by vertex names, as accepted by `WeightedGraph::build`.
struct EdgeSpec {
  std::string u;
  std::string v;
  Weight weight;
};

struct Neighbor {
  VertexId vertex;
  std::size_t edge;  // index into WeightedGraph::edges()
};

/// Finite simple graph with exact nonnegative edge weights.
///
/// Vertices are opaque names; their insertion order fixes `VertexId`s and the
/// row order of every matrix computed from the graph. Instances are immutable.
class WeightedGraph {
 public:
  /// Throws EmptyGraph, DuplicateVertex, UnknownVertex, SelfLoop or DuplicateEdge.
  static WeightedGraph build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
    WeightedGraph g(std::move(vertices));
    std::vector<Edge> resolved;
    resolved.reserve(edges.size());
    for (const auto& e : edges) resolved.push_back({g.id(e.u), g.id(e.v), e.weight});
    g.add_edges(std::move(resolved));
    return g;
  }

  /// Same contract as `build`, with endpoints given as vertex ids.
  static WeightedGraph from_ids(std::vector<std::string> vertices, std::vector<Edge> edges) {
    WeightedGraph g(std::move(vertices));
    g.add_edges(std::move(edges));
    return g;
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertices() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }

  std::optional<VertexId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId id(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw Error(ErrorCode::UnknownVertex, std::string(name));
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  /// Neighbors sorted by vertex id.
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  std::optional<std::size_t> edge_between(VertexId a, VertexId b) const {
    auto it = edge_index_.find(key(a, b));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  bool adjacent(VertexId a, VertexId b) const { return a != b && edge_between(a, b).has_value(); }

  /// Weight of edge {a,b}; throws UnknownVertex-coded error if absent.
  const Weight& weight(VertexId a, VertexId b) const {
    if (auto e = edge_between(a, b)) return edges_[*e].weight;
    throw Error(ErrorCode::UnknownVertex, "no edge " + name(a) + " " + name(b));
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({names_[e.u], names_[e.v], e.weight});
    return out;
  }

 private:
  explicit WeightedGraph(std::vector<std::string> vertices) : names_(std::move(vertices)) {
    if (names_.empty()) throw Error(ErrorCode::EmptyGraph, "graph needs at least one vertex");
    for (VertexId i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw Error(ErrorCode::InvalidVertexName, "empty vertex name");
      if (!index_.emplace(names_[i], i).second) throw Error(ErrorCode::DuplicateVertex, names_[i]);
    }
    adjacency_.resize(names_.size());
  }

  std::uint64_t key(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * names_.size() + b;
  }

  void add_edges(std::vector<Edge> edges) {
    edges_.reserve(edges.size());
    for (auto& e : edges) {
      if (e.u >= names_.size() || e.v >= names_.size())
        throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
      if (e.u == e.v) throw Error(ErrorCode::SelfLoop, names_[e.u] + " " + names_[e.v]);
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!edge_index_.emplace(key(e.u, e.v), edges_.size()).second)
        throw Error(ErrorCode::DuplicateEdge, names_[e.u] + " " + names_[e.v]);
      adjacency_[e.u].push_back({e.v, edges_.size()});
      adjacency_[e.v].push_back({e.u, edges_.size()});
      edges_.push_back(std::move(e));
    }
    for (auto& list : adjacency_)
      std::sort(list.begin(), list.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

/// Disjoint nonempty vertex blocks covering the vertex set.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidMatrix-coded error unless `blocks` partition {0..n-1}.
  Partition(std::vector<std::vector<VertexId>> blocks, std::size_t vertex_count)
      : blocks_(std::move(blocks)), block_of_(vertex_count, vertex_count) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].empty()) throw Error(ErrorCode::InvalidMatrix, "empty partition block");
      for (VertexId v : blocks_[b]) {
        if (v >= vertex_count || block_of_[v] != vertex_count)
          throw Error(ErrorCode::InvalidMatrix, "partition blocks overlap or are out of range");
        block_of_[v] = b;
      }
    }
    for (std::size_t b : block_of_)
      if (b == vertex_count) throw Error(ErrorCode::InvalidMatrix, "partition does not cover vertices");
  }

  const std::vector<std::vector<VertexId>>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<VertexId>& operator[](std::size_t i) const { return blocks_.at(i); }
  std::size_t block_of(VertexId v) const { return block_of_.at(v); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<VertexId>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Repetition-free vertex sequence whose consecutive vertices are adjacent.
struct Path {
  std::vector<VertexId> vertices;

  bool is_valid_in(const WeightedGraph& g) const {
    if (vertices.empty()) return false;
    std::unordered_set<VertexId> seen;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] >= g.vertex_count() || !seen.insert(vertices[i]).second) return false;
      if (i > 0 && !g.adjacent(vertices[i - 1], vertices[i])) return false;
    }
    return true;
  }

  /// Edge indices along the path.
  std::vector<std::size_t> edges_in(const WeightedGraph& g) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < vertices.size(); ++i)
      out.push_back(g.edge_between(vertices[i - 1], vertices[i]).value());
    return out;
  }

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Cyclic repetition-free vertex sequence of length at least three.
struct Cycle {
  std::vector<VertexId> vertices;

  bool is_valid_in(const WeightedGraph& g) const {
    if (vertices.size() < 3) return false;
    if (!Path{vertices}.is_valid_in(g)) return false;
    return g.adjacent(vertices.back(), vertices.front());
  }

  std::vector<std::size_t> edges_in(const WeightedGraph& g) const {
    auto out = Path{vertices}.edges_in(g);
    out.push_back(g.edge_between(vertices.back(), vertices.front()).value());
    return out;
  }

  /// Number of cycle edges attaining the cycle's maximal weight.
  std::size_t max_edge_multiplicity(const WeightedGraph& g) const {
    auto ids = edges_in(g);
    const Weight* top = nullptr;
    std::size_t count = 0;
    for (auto e : ids) {
      const Weight& w = g.edge(e).weight;
      if (!top || *top < w) {
        top = &w;
        count = 1;
      } else if (w == *top) {
        ++count;
      }
    }
    return count;
  }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Maximal connected vertex sets; blocks ordered by first vertex, members ascending.
inline Partition connected_components(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> blocks;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> block{s};
    seen[s] = true;
    for (std::size_t head = 0; head < block.size(); ++head)
      for (const auto& nb : g.neighbors(block[head]))
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          block.push_back(nb.vertex);
        }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return Partition(std::move(blocks), n);
}

inline bool is_connected(const WeightedGraph& g) { return connected_components(g).size() == 1; }

/// Throws DisconnectedError naming the first vertices of the first two components.
inline void require_connected(const WeightedGraph& g) {
  auto parts = connected_components(g);
  if (parts.size() > 1) throw DisconnectedError(g.name(parts[0][0]), g.name(parts[1][0]));
}

/// Same vertices; keeps exactly the edges lighter than `bound`.
inline WeightedGraph strict_threshold_subgraph(const WeightedGraph& g, const Weight& bound) {
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (e.weight < bound) kept.push_back(e);
  return WeightedGraph::from_ids(g.vertices(), std::move(kept));
}

/// Shortest (fewest edges) path from `from` to `to`, if one exists.
inline std::optional<Path> bfs_path(const WeightedGraph& g, VertexId from, VertexId to) {
  std::vector<std::optional<VertexId>> parent(g.vertex_count());
  parent[from] = from;
  std::vector<VertexId> queue{from};
  for (std::size_t head = 0; head < queue.size() && !parent[to]; ++head)
    for (const auto& nb : g.neighbors(queue[head]))
      if (!parent[nb.vertex]) {
        parent[nb.vertex] = queue[head];
        queue.push_back(nb.vertex);
      }
  if (!parent[to]) return std::nullopt;
  Path p;
  for (VertexId v = to; v != from; v = *parent[v]) p.vertices.push_back(v);
  p.vertices.push_back(from);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace ultragraph
