#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ultragraph/graph.hpp"
#include "ultragraph/metrics.hpp"

namespace ultragraph::test {

inline WeightedGraph graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return WeightedGraph::build(std::move(vertices), edges);
}

inline WeightedGraph triangle(Weight ab, Weight bc, Weight ac) {
  return graph({"a", "b", "c"}, {{"a", "b", ab}, {"b", "c", bc}, {"a", "c", ac}});
}

/// 4-cycle a-b-c-d-a.
inline WeightedGraph c4(Weight ab, Weight bc, Weight cd, Weight da) {
  return graph({"a", "b", "c", "d"}, {{"a", "b", ab}, {"b", "c", bc}, {"c", "d", cd}, {"d", "a", da}});
}

/// Unit triangle u, v, q plus pendant edge q-p.
inline WeightedGraph paw() {
  return graph({"u", "v", "q", "p"}, {{"u", "v", 1}, {"v", "q", 1}, {"q", "u", 1}, {"q", "p", 1}});
}

inline WeightedGraph path4(Weight w12 = 1, Weight w23 = 1, Weight w34 = 1) {
  return graph({"v1", "v2", "v3", "v4"}, {{"v1", "v2", w12}, {"v2", "v3", w23}, {"v3", "v4", w34}});
}

inline WeightedGraph k4() {
  return graph({"a", "b", "c", "d"},
               {{"a", "b", 1}, {"a", "c", 1}, {"a", "d", 1}, {"b", "c", 1}, {"b", "d", 1}, {"c", "d", 1}});
}

inline WeightedGraph star3() {
  return graph({"z", "x", "y", "w"}, {{"z", "x", 1}, {"z", "y", 2}, {"z", "w", 3}});
}

inline DistanceMatrix matrix(std::vector<std::string> vertices, const std::vector<std::vector<Weight>>& rows) {
  std::vector<Weight> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return DistanceMatrix(std::move(vertices), std::move(entries));
}

/// Three points with d(a,b) = ab, d(b,c) = bc, d(a,c) = ac.
inline DistanceMatrix triple(Weight ab, Weight bc, Weight ac) {
  return matrix({"a", "b", "c"}, {{0, ab, ac}, {ab, 0, bc}, {ac, bc, 0}});
}

inline std::pair<VertexId, VertexId> ids(const WeightedGraph& g, const char* a, const char* b) {
  return {g.id(a), g.id(b)};
}

}  // namespace ultragraph::test
