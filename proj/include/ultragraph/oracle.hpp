#pragma once

// Brute-force reference implementations by exhaustive path and cycle
// enumeration. Exponential; inputs are capped and fail loudly beyond the cap.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultragraph/error.hpp"
#include "ultragraph/extension.hpp"
#include "ultragraph/graph.hpp"

namespace ultragraph::oracle {

struct Limits {
  std::size_t max_vertices = 12;
  std::size_t max_objects = 1'000'000;
};

namespace detail {

inline void check_size(const WeightedGraph& g, const Limits& limits) {
  if (g.vertex_count() > limits.max_vertices)
    throw Error(ErrorCode::SizeLimit, std::to_string(g.vertex_count()) + " vertices exceeds cap of " +
                                          std::to_string(limits.max_vertices));
}

inline void count_object(std::size_t& count, const Limits& limits) {
  if (++count > limits.max_objects)
    throw Error(ErrorCode::SizeLimit, "more than " + std::to_string(limits.max_objects) + " objects");
}

/// Calls `visit(path)` for every simple path from u to v, in lexicographic order.
template <typename Visit>
void for_each_simple_path(const WeightedGraph& g, VertexId u, VertexId v, const Limits& limits, Visit&& visit) {
  check_size(g, limits);
  std::vector<VertexId> path{u};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[u] = true;
  std::size_t count = 0;
  auto dfs = [&](auto&& self, VertexId at) -> void {
    for (const auto& nb : g.neighbors(at)) {
      if (on_path[nb.vertex]) continue;
      path.push_back(nb.vertex);
      if (nb.vertex == v) {
        count_object(count, limits);
        visit(Path{path});
      } else {
        on_path[nb.vertex] = true;
        self(self, nb.vertex);
        on_path[nb.vertex] = false;
      }
      path.pop_back();
    }
  };
  if (u != v) dfs(dfs, u);
}

/// Heaviest weight on the path and how many of its edges attain it.
inline std::pair<Weight, std::size_t> path_maximum(const WeightedGraph& g, const Path& p) {
  Weight top(0);
  std::size_t count = 0;
  for (auto e : p.edges_in(g)) {
    const Weight& w = g.edge(e).weight;
    if (count == 0 || top < w) {
      top = w;
      count = 1;
    } else if (w == top) {
      ++count;
    }
  }
  return {top, count};
}

}  // namespace detail

/// All simple u–v paths in lexicographic order of vertex sequence.
inline std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, VertexId u, VertexId v,
                                                const Limits& limits = {}) {
  std::vector<Path> out;
  detail::for_each_simple_path(g, u, v, limits, [&](Path p) { out.push_back(std::move(p)); });
  return out;
}

/// Every simple cycle once, in canonical form: smallest vertex first, and its
/// smaller cycle-neighbour second. Output sorted.
inline std::vector<Cycle> enumerate_simple_cycles(const WeightedGraph& g, const Limits& limits = {}) {
  detail::check_size(g, limits);
  std::vector<Cycle> out;
  std::size_t count = 0;
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> path;
  std::vector<bool> on_path(n, false);
  for (VertexId s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    auto dfs = [&](auto&& self, VertexId at) -> void {
      for (const auto& nb : g.neighbors(at)) {
        VertexId x = nb.vertex;
        if (x == s && path.size() >= 3 && path[1] < path.back()) {
          detail::count_object(count, limits);
          out.push_back(Cycle{path});
        }
        if (x <= s || on_path[x]) continue;
        on_path[x] = true;
        path.push_back(x);
        self(self, x);
        path.pop_back();
        on_path[x] = false;
      }
    };
    dfs(dfs, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Least path maximum over all simple u–v paths, literally. Throws NoPath.
inline Weight oracle_subdominant(const WeightedGraph& g, VertexId u, VertexId v, const Limits& limits = {}) {
  if (u == v) return Weight(0);
  std::optional<Weight> best;
  detail::for_each_simple_path(g, u, v, limits, [&](const Path& p) {
    auto top = detail::path_maximum(g, p).first;
    if (!best || top < *best) best = top;
  });
  if (!best) throw Error(ErrorCode::NoPath, g.name(u) + " " + g.name(v));
  return *best;
}

/// Least path weight sum over all simple u–v paths. Throws NoPath.
inline Weight oracle_shortest_path(const WeightedGraph& g, VertexId u, VertexId v, const Limits& limits = {}) {
  if (u == v) return Weight(0);
  std::optional<Weight> best;
  detail::for_each_simple_path(g, u, v, limits, [&](const Path& p) {
    Weight sum(0);
    for (auto e : p.edges_in(g)) sum = sum + g.edge(e).weight;
    if (!best || sum < *best) best = sum;
  });
  if (!best) throw Error(ErrorCode::NoPath, g.name(u) + " " + g.name(v));
  return *best;
}

/// Every cycle has at least two edges attaining its maximum.
inline bool oracle_cycle_condition(const WeightedGraph& g, const Limits& limits = {}) {
  for (const auto& c : enumerate_simple_cycles(g, limits))
    if (c.max_edge_multiplicity(g) < 2) return false;
  return true;
}

/// Nonadjacent pairs all of whose simple paths carry ≥ 2 heaviest edges.
/// Throws DisconnectedError.
inline PairSet oracle_tm(const WeightedGraph& g, const Limits& limits = {}) {
  require_connected(g);
  PairSet out;
  for (VertexId p = 0; p < g.vertex_count(); ++p)
    for (VertexId q = p + 1; q < g.vertex_count(); ++q) {
      if (g.adjacent(p, q)) continue;
      bool twice = true;
      detail::for_each_simple_path(g, p, q, limits, [&](const Path& path) {
        if (detail::path_maximum(g, path).second < 2) twice = false;
      });
      if (twice) out.insert(p, q);
    }
  return out;
}

/// Finite truncation of the ladder u – s_n – t_n – v (n = 1..N), each rung's
/// three edges weighted eps[n-1]. Vertex order: u, v, s1..sN, t1..tN.
/// Throws BadSequence unless eps is nonempty, positive and strictly decreasing.
inline WeightedGraph example31_truncation(std::span<const Weight> eps) {
  if (eps.empty()) throw Error(ErrorCode::BadSequence, "need at least one rung");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i].is_zero()) throw Error(ErrorCode::BadSequence, "weights must be positive");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw Error(ErrorCode::BadSequence, "weights must strictly decrease");
  }
  const std::size_t n = eps.size();
  std::vector<std::string> names{"u", "v"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId s = 2 + i, t = 2 + n + i;
    edges.push_back({0, s, eps[i]});
    edges.push_back({s, t, eps[i]});
    edges.push_back({t, 1, eps[i]});
  }
  return WeightedGraph::from_ids(std::move(names), std::move(edges));
}

inline WeightedGraph example31_truncation(std::size_t rungs, std::span<const Weight> eps) {
  if (rungs == 0 || eps.size() != rungs)
    throw Error(ErrorCode::BadSequence, "expected " + std::to_string(rungs) + " weights");
  return example31_truncation(eps);
}

/// The truncation with eps_n = 1/n.
inline WeightedGraph example31_harmonic(std::size_t rungs) {
  std::vector<Weight> eps;
  for (std::size_t i = 1; i <= rungs; ++i) eps.emplace_back(1, static_cast<std::int64_t>(i));
  return example31_truncation(eps);
}

}  // namespace ultragraph::oracle
