#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ultragraph/error.hpp"
#include "ultragraph/graph.hpp"
#include "ultragraph/metrics.hpp"
#include "ultragraph/weight.hpp"

namespace ultragraph::io {

namespace detail {

inline std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> split_csv_row(std::string_view row, std::size_t line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false, was_quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    char c = row[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < row.size() && row[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quote", line);
  out.push_back(std::move(field));
  return out;
}

inline Weight parse_weight_at(std::string_view token, std::size_t line) {
  try {
    return Weight::parse(token);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NegativeWeight) throw Error(ErrorCode::NegativeWeight, std::string(token), line);
    throw Error(ErrorCode::ParseError, "bad weight '" + std::string(token) + "'", line);
  }
}

}  // namespace detail

/// Parses `<u> <v> <weight>` lines. Blank lines and lines starting with `#`
/// are skipped; `vertex <name>` declares a (possibly isolated) vertex. Vertex
/// order is first appearance. Errors carry the 1-based line number.
inline WeightedGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.emplace(std::string(token), names.size());
    if (inserted) names.emplace_back(token);
    return it->second;
  };

  auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    auto tokens = detail::split_whitespace(lines[i]);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      intern(tokens[1]);
      continue;
    }
    if (tokens.size() != 3)
      throw Error(ErrorCode::ParseError, "expected '<u> <v> <weight>' or 'vertex <name>'", line);
    Weight w = detail::parse_weight_at(tokens[2], line);
    if (tokens[0] == tokens[1]) throw Error(ErrorCode::SelfLoop, std::string(tokens[0]), line);
    VertexId u = intern(tokens[0]), v = intern(tokens[1]);
    if (!seen.insert(std::minmax(u, v)).second)
      throw Error(ErrorCode::DuplicateEdge, std::string(tokens[0]) + " " + std::string(tokens[1]), line);
    edges.push_back({u, v, std::move(w)});
  }
  if (names.empty()) throw Error(ErrorCode::EmptyGraph, "no vertices in input");
  return WeightedGraph::from_ids(std::move(names), std::move(edges));
}

/// Edge-list text that parses back to `g` with the same vertex order.
inline std::string emit_edge_list(const WeightedGraph& g) {
  std::string out;
  for (const auto& name : g.vertices()) out += "vertex " + name + "\n";
  for (const auto& e : g.edges()) out += g.name(e.u) + " " + g.name(e.v) + " " + e.weight.to_string() + "\n";
  return out;
}

enum class MatrixFormat { Json, Csv };

/// JSON: {"vertices":[...],"matrix":[[...]],"axiom_class":"..."} with exact
/// entries as strings. CSV: header `,a,b`, then one row per vertex. No
/// trailing newline.
inline std::string emit_matrix(const DistanceMatrix& m, MatrixFormat format) {
  const std::size_t n = m.size();
  if (format == MatrixFormat::Json) {
    nlohmann::ordered_json doc;
    doc["vertices"] = m.vertices();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j).to_string());
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    doc["axiom_class"] = std::string(to_string(m.axiom_class()));
    return doc.dump();
  }
  std::string out;
  for (const auto& name : m.vertices()) out += "," + detail::csv_field(name);
  for (std::size_t i = 0; i < n; ++i) {
    out += "\n" + detail::csv_field(m.vertices()[i]);
    for (std::size_t j = 0; j < n; ++j) out += "," + m.at(i, j).to_string();
  }
  return out;
}

/// Inverse of `emit_matrix(·, Json)`. A declared axiom class that disagrees
/// with the entries is a parse error.
inline DistanceMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  auto fail = [](const std::string& what) { return Error(ErrorCode::ParseError, what); };
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("matrix"))
    throw fail("expected object with 'vertices' and 'matrix'");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw fail("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  const std::size_t n = vertices.size();
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != n) throw fail("matrix must have one row per vertex");
  std::vector<Weight> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw fail("matrix rows must have one entry per vertex");
    for (const auto& cell : row) {
      if (!cell.is_string()) throw fail("matrix entries must be strings");
      try {
        entries.push_back(Weight::parse(cell.get<std::string>()));
      } catch (const Error&) {
        throw fail("bad entry '" + cell.get<std::string>() + "'");
      }
    }
  }
  DistanceMatrix m(std::move(vertices), std::move(entries));
  if (doc.contains("axiom_class")) {
    if (!doc["axiom_class"].is_string() || doc["axiom_class"].get<std::string>() != to_string(m.axiom_class()))
      throw fail("declared axiom_class does not match entries");
  }
  return m;
}

/// Inverse of `emit_matrix(·, Csv)`.
inline DistanceMatrix parse_matrix_csv(std::string_view text) {
  auto lines = detail::lines_of(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty csv");
  auto header = detail::split_csv_row(lines[0], 1);
  if (header.empty() || !header[0].empty()) throw Error(ErrorCode::ParseError, "header must start with ','", 1);
  std::vector<std::string> vertices(header.begin() + 1, header.end());
  const std::size_t n = vertices.size();
  if (lines.size() != n + 1) throw Error(ErrorCode::ParseError, "expected one row per vertex");
  std::vector<Weight> entries;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = detail::split_csv_row(lines[i + 1], i + 2);
    if (row.size() != n + 1 || row[0] != vertices[i])
      throw Error(ErrorCode::ParseError, "row does not match header", i + 2);
    for (std::size_t j = 1; j <= n; ++j) entries.push_back(detail::parse_weight_at(row[j], i + 2));
  }
  return DistanceMatrix(std::move(vertices), std::move(entries));
}

namespace detail {

inline std::string newick_label(const std::string& name) {
  if (name.find_first_of(" \t()[]':;,") == std::string::npos) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

inline std::string newick_length(const Weight& w, std::optional<int> approx_digits) {
  if (w.is_terminating_decimal()) return w.to_string();
  if (!approx_digits) throw Error(ErrorCode::NonTerminatingDecimal, w.to_string());
  return w.to_decimal(*approx_digits) + "[" + w.to_string() + "]";
}

}  // namespace detail

/// Newick text whose branch lengths make leaf-to-leaf path lengths equal the
/// ultrametric distances. Children are ordered by the smallest leaf label
/// below them. Non-terminating branch lengths throw NonTerminatingDecimal
/// unless `approx_digits` is given, in which case the rounded decimal is
/// followed by the exact value as a `[p/q]` comment.
inline std::string emit_newick(const Dendrogram& d, std::optional<int> approx_digits = std::nullopt) {
  const auto& nodes = d.nodes();
  std::vector<std::string> min_label(nodes.size());
  auto smallest = [&](auto&& self, std::size_t x) -> const std::string& {
    if (!min_label[x].empty()) return min_label[x];
    if (nodes[x].leaf) return min_label[x] = d.labels()[*nodes[x].leaf];
    std::string best;
    for (auto c : nodes[x].children) {
      const auto& s = self(self, c);
      if (best.empty() || s < best) best = s;
    }
    return min_label[x] = best;
  };

  auto render = [&](auto&& self, std::size_t x) -> std::string {
    const auto& node = nodes[x];
    if (node.leaf) return detail::newick_label(d.labels()[*node.leaf]);
    std::vector<std::size_t> children = node.children;
    std::sort(children.begin(), children.end(),
              [&](std::size_t a, std::size_t b) { return smallest(smallest, a) < smallest(smallest, b); });
    std::string out = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ",";
      Weight branch(node.height.value() - nodes[children[i]].height.value());
      out += self(self, children[i]) + ":" + detail::newick_length(branch, approx_digits);
    }
    return out + ")";
  };
  return render(render, d.root()) + ";";
}

}  // namespace ultragraph::io
