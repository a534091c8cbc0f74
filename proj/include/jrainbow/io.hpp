#pragma once

#include <jrainbow/errors.hpp>
#include <jrainbow/graph.hpp>

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace jrainbow {

enum class GraphFormat { EdgeList, Dimacs };

inline GraphFormat parse_format(std::string_view name) {
  if (name == "edge-list" || name == "edges") return GraphFormat::EdgeList;
  if (name == "dimacs" || name == "dimacs-col" || name == "col") return GraphFormat::Dimacs;
  throw ValidationError("unknown graph format '" + std::string(name) + "'");
}

inline std::string_view format_name(GraphFormat f) {
  return f == GraphFormat::EdgeList ? "edge-list" : "dimacs";
}

namespace detail {

// Reads exactly `count` integers from the rest of `in`; anything left over is an error.
inline std::vector<long long> read_ints(std::istringstream& in, int count, std::size_t line_no,
                                        std::string_view what) {
  std::vector<long long> out(count);
  for (auto& x : out)
    if (!(in >> x)) throw ParseError(line_no, "expected " + std::string(what));
  std::string rest;
  if (in >> rest) throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
  return out;
}

inline void check_endpoint(long long x, long long n, std::size_t line_no) {
  if (x < 0 || x >= n)
    throw ValidationError("line " + std::to_string(line_no) + ": vertex index out of range (n = " +
                          std::to_string(n) + ")");
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream src{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0, seen = 0;
  std::vector<Edge> edges;

  while (std::getline(src, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream in(line);
    if (!have_header) {
      auto hdr = read_ints(in, 2, line_no, "header 'n m'");
      n = hdr[0];
      m = hdr[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      if (n > std::numeric_limits<int>::max()) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      continue;
    }
    auto uv = read_ints(in, 2, line_no, "edge 'u v'");
    check_endpoint(uv[0], n, line_no);
    check_endpoint(uv[1], n, line_no);
    if (uv[0] == uv[1])
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(uv[0]));
    if (++seen > m) throw ParseError(line_no, "more edge lines than the " + std::to_string(m) + " declared");
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (seen != m)
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return Graph(static_cast<int>(n), edges);
}

inline Graph parse_dimacs(std::string_view text) {
  std::istringstream src{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  std::vector<Edge> edges;

  while (std::getline(src, line)) {
    ++line_no;
    std::istringstream in(line);
    std::string tag;
    if (!(in >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' line");
      std::string kind;
      if (!(in >> kind) || (kind != "edge" && kind != "edges" && kind != "col"))
        throw ParseError(line_no, "expected 'p edge n m'");
      auto hdr = read_ints(in, 2, line_no, "'n m' after 'p edge'");
      if (hdr[0] < 0 || hdr[1] < 0) throw ParseError(line_no, "negative count in header");
      if (hdr[0] > std::numeric_limits<int>::max()) throw ParseError(line_no, "vertex count too large");
      n = hdr[0];
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(line_no, "'e' line before 'p' header");
      auto uv = read_ints(in, 2, line_no, "'e u v'");
      check_endpoint(uv[0] - 1, n, line_no);
      check_endpoint(uv[1] - 1, n, line_no);
      if (uv[0] == uv[1])
        throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                              std::to_string(uv[0]));
      edges.emplace_back(static_cast<Vertex>(uv[0] - 1), static_cast<Vertex>(uv[1] - 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  // The declared edge count is not enforced: published .col files often count
  // both orientations.
  if (!have_header) throw ParseError(line_no, "missing 'p edge n m' header");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace detail

/// Edge-list: "n m" then m lines "u v" (0-based), '#' starts a comment.
/// DIMACS .col: 'c' comments, one "p edge n m", then "e u v" (1-based).
inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? detail::parse_edge_list(text) : detail::parse_dimacs(text);
}

/// Edges are written with u < v in lexicographic order.
inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  const auto edges = g.edges();
  if (format == GraphFormat::EdgeList) {
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  } else {
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

}  // namespace jrainbow
