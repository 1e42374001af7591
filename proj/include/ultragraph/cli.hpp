#pragma once

// Command-line front end. `run_cli` is kept free of process state so tests can
// drive it with string streams.
//
// Exit codes: 0 affirmative / success, 1 negative verdict, 2 usage or input
// error (one machine-readable `error: <code>...` line on stderr).

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ultragraph/error.hpp"
#include "ultragraph/extension.hpp"
#include "ultragraph/graph.hpp"
#include "ultragraph/io.hpp"
#include "ultragraph/metrics.hpp"
#include "ultragraph/oracle.hpp"
#include "ultragraph/structure.hpp"

namespace ultragraph::cli {

namespace detail {

inline std::string join_names(const WeightedGraph& g, const std::vector<VertexId>& ids, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += g.name(ids[i]);
  }
  return out;
}

inline void print_pairs(const WeightedGraph& g, const PairSet& pairs, std::ostream& out) {
  for (auto [a, b] : pairs) out << g.name(a) << ' ' << g.name(b) << '\n';
}

inline void print_matrix(const DistanceMatrix& m, const std::string& format, std::optional<int> approx_digits,
                         std::ostream& out) {
  if (format == "csv") {
    out << io::emit_matrix(m, io::MatrixFormat::Csv) << '\n';
  } else if (format == "newick") {
    // Zero off-diagonal distances are collapsed first; leaves are then classes.
    DistanceMatrix tree_input = m.axiom_class() == AxiomClass::Ultrametric ? m : quotient(m).matrix;
    out << io::emit_newick(dendrogram(tree_input), approx_digits) << '\n';
  } else {
    out << io::emit_matrix(m, io::MatrixFormat::Json) << '\n';
  }
}

inline void report_check(const WeightedGraph& g, const ExtendabilityReport& report, std::ostream& out,
                         std::ostream& err) {
  if (report.pseudoultrametrizable) {
    out << "pseudoultrametrizable\n";
    return;
  }
  const auto& cycle = report.witness->vertices;
  out << "not-pseudoultrametrizable\n";
  err << "witness-cycle " << join_names(g, cycle) << " max-edge " << g.name(cycle.back()) << ','
      << g.name(cycle.front()) << '\n';
}

/// The weights of a complete graph read as a distance matrix.
inline DistanceMatrix weights_as_matrix(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Weight> entries(n * n);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b) {
      if (a == b) continue;
      auto e = g.edge_between(a, b);
      if (!e) throw Error(ErrorCode::InvalidMatrix, "--source weights needs a complete graph");
      entries[a * n + b] = g.edge(*e).weight;
    }
  return DistanceMatrix(g.vertices(), std::move(entries));
}

inline std::string format_exponent(const ExtendedExponent& e) {
  if (e.is_infinite()) return "inf";
  std::ostringstream s;
  s << std::setprecision(12) << e.value();
  return s.str();
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudoultrametric extensions of weighted graphs.", "ultragraph"};
  app.require_subcommand(1);
  std::string input_path;
  app.add_option("-i,--input", input_path, "Edge-list file (default: stdin)");

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  std::string format = "json";
  std::optional<int> approx_digits;
  double tolerance = 1e-9;
  std::string exponent_source = "shortest";
  std::size_t hub = 0;
  std::vector<std::string> constants;
  std::string query = "check";
  std::size_t max_vertices = oracle::Limits{}.max_vertices;

  auto* check = add("check",
                    "Decide whether some pseudoultrametric extends the weight: every cycle must carry at "
                    "least two heaviest edges. Prints a witness cycle on failure.");
  auto* subdominant = add("subdominant",
                          "Subdominant pseudoultrametric (least over paths of the heaviest edge). "
                          "Newick output collapses zero distances and prints the dendrogram.");
  subdominant->add_option("--format", format, "json | csv | newick")
      ->check(CLI::IsMember({"json", "csv", "newick"}));
  subdominant->add_option("--approx-digits", approx_digits,
                          "Round non-terminating Newick branch lengths to this many digits");
  auto* shortest = add("shortest", "Shortest-path pseudometric, the greatest pseudometric below the weight.");
  shortest->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  auto* least = add("least",
                    "Least pseudoultrametric extension; exists for every extendable weight exactly on "
                    "complete k-partite graphs with k >= 2.");
  least->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  auto* tm = add("tm", "Nonadjacent pairs every connecting path of which has two heaviest edges.");
  auto* wch = add("wch", "Well-chained nonadjacent pairs: joined through zero-weight edges.");
  auto* unique = add("unique",
                     "Whether the extension is unique: every twice-max pair must be well chained.");
  auto* structure = add("structure", "Forest / tree / complete k-partite / star report.");
  auto* exponent = add("exponent",
                       "Betweenness exponent: supremum of alpha >= 1 keeping d^alpha a metric "
                       "(inf exactly for pseudoultrametrics).");
  exponent->add_option("--tol", tolerance, "Bisection tolerance")->check(CLI::PositiveNumber);
  exponent->add_option("--source", exponent_source,
                       "shortest: the shortest-path pseudometric; weights: a complete graph read as a matrix")
      ->check(CLI::IsMember({"shortest", "weights"}));
  auto* augment_cmd = add("augment",
                          "Connect every component to a hub component by one edge of a chosen weight; "
                          "creates no new cycles.");
  augment_cmd->add_option("--hub", hub, "Hub component index (components ordered by first vertex)");
  augment_cmd->add_option("--const", constants, "name=value: weight of the edge joining the component of "
                                                "vertex `name` to the hub");
  auto* oracle_cmd = add("oracle", "Brute-force counterparts by exhaustive enumeration (size-capped).");
  oracle_cmd->add_option("--query", query, "check | subdominant | shortest | tm | cycles")
      ->check(CLI::IsMember({"check", "subdominant", "shortest", "tm", "cycles"}));
  oracle_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  oracle_cmd->add_option("--max-vertices", max_vertices, "Enumeration vertex cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    std::string text;
    if (input_path.empty()) {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(input_path, std::ios::binary);
      if (!file) {
        err << "error: io: cannot open " << input_path << '\n';
        return 2;
      }
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    const WeightedGraph g = io::parse_edge_list(text);

    if (*check) {
      auto report = is_pseudoultrametrizable(g);
      detail::report_check(g, report, out, err);
      return report.pseudoultrametrizable ? 0 : 1;
    }
    if (*subdominant) {
      detail::print_matrix(subdominant_matrix(g), format, approx_digits, out);
      return 0;
    }
    if (*shortest) {
      detail::print_matrix(shortest_path_matrix(g), format, std::nullopt, out);
      return 0;
    }
    if (*least) {
      detail::print_matrix(least_extension(g), format, std::nullopt, out);
      return 0;
    }
    if (*tm) {
      detail::print_pairs(g, tm_pairs(g), out);
      return 0;
    }
    if (*wch) {
      detail::print_pairs(g, wch_pairs(g), out);
      return 0;
    }
    if (*unique) {
      bool one = is_unique_extension(g);
      out << (one ? "unique" : "not-unique") << '\n';
      return one ? 0 : 1;
    }
    if (*structure) {
      auto components = connected_components(g);
      out << "vertices: " << g.vertex_count() << '\n'
          << "edges: " << g.edge_count() << '\n'
          << "components: " << components.size() << '\n'
          << "forest: " << (is_forest(g) ? "true" : "false") << '\n'
          << "tree: " << (is_tree(g) ? "true" : "false") << '\n';
      if (auto parts = multipartite_parts(g)) {
        out << "multipartite: k=" << parts->size();
        for (const auto& part : parts->blocks()) out << " {" << detail::join_names(g, part) << '}';
        out << '\n';
      } else {
        auto h = find_induced_H(g).value();
        out << "multipartite: absent induced-H " << g.name(h.u) << ',' << g.name(h.v) << ',' << g.name(h.p)
            << '\n';
      }
      out << "star: " << (is_star(g) ? "true" : "false") << '\n';
      return 0;
    }
    if (*exponent) {
      DistanceMatrix m = exponent_source == "weights" ? detail::weights_as_matrix(g) : shortest_path_matrix(g);
      out << detail::format_exponent(betweenness_exponent(m, tolerance)) << '\n';
      return 0;
    }
    if (*augment_cmd) {
      auto components = connected_components(g);
      std::map<std::size_t, Weight> by_component;
      for (const auto& spec : constants) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "--const expects name=value: " + spec);
        VertexId v = g.id(spec.substr(0, eq));
        std::size_t component = components.block_of(v);
        if (!by_component.emplace(component, Weight::parse(spec.substr(eq + 1))).second)
          throw Error(ErrorCode::ParseError, "two constants for the component of " + spec.substr(0, eq));
      }
      out << io::emit_edge_list(augment(g, hub, by_component));
      return 0;
    }
    if (*oracle_cmd) {
      oracle::Limits limits;
      limits.max_vertices = max_vertices;
      if (query == "check") {
        bool ok = oracle::oracle_cycle_condition(g, limits);
        out << (ok ? "pseudoultrametrizable" : "not-pseudoultrametrizable") << '\n';
        return ok ? 0 : 1;
      }
      if (query == "tm") {
        detail::print_pairs(g, oracle::oracle_tm(g, limits), out);
        return 0;
      }
      if (query == "cycles") {
        for (const auto& c : oracle::enumerate_simple_cycles(g, limits))
          out << detail::join_names(g, c.vertices) << '\n';
        return 0;
      }
      require_connected(g);
      const std::size_t n = g.vertex_count();
      std::vector<Weight> entries(n * n);
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
          entries[a * n + b] = entries[b * n + a] = query == "subdominant"
                                                        ? oracle::oracle_subdominant(g, a, b, limits)
                                                        : oracle::oracle_shortest_path(g, a, b, limits);
      detail::print_matrix(DistanceMatrix(g.vertices(), std::move(entries)), format, std::nullopt, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ultragraph::cli
