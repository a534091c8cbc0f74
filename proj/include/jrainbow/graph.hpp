#pragma once

#include <jrainbow/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jrainbow {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable once built. Duplicate edges (in either orientation) are
/// collapsed; self-loops and out-of-range endpoints throw ValidationError.
/// Neighbour lists are kept sorted, so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::span<const Edge> edges = {}) : adj_(check_order(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n - 1));
      if (u == v)
        throw ValidationError("self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      edge_count_ += nb.size();
    }
    edge_count_ /= 2;
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 0) throw ValidationError("vertex count must be non-negative, got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// δ(G). Zero for the empty graph.
inline int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

/// N[v] = {v} ∪ neighbours(v), sorted.
inline std::vector<Vertex> closed_neighbourhood(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
  auto nb = g.neighbours(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

/// The null graph counts as disconnected.
inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

/// Vertices of degree at least two.
inline bool is_internal(const Graph& g, Vertex v) { return g.degree(v) >= 2; }

inline bool has_pendant(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) return true;
  return false;
}

}  // namespace jrainbow
