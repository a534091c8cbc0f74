#pragma once

#include <jrainbow/colouring.hpp>
#include <jrainbow/errors.hpp>
#include <jrainbow/graph.hpp>

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jrainbow {

/// Which vertices must see every colour in their closed neighbourhood:
/// all of them (J) or only internal ones (JStar).
enum class Mode { J, JStar };

inline std::string_view mode_name(Mode m) { return m == Mode::J ? "J" : "Jstar"; }

inline Mode parse_mode(std::string_view s) {
  if (s == "J" || s == "j") return Mode::J;
  if (s == "Jstar" || s == "jstar" || s == "J*" || s == "JStar") return Mode::JStar;
  throw ValidationError("unknown mode '" + std::string(s) + "' (expected J or Jstar)");
}

inline bool is_feasible(const Graph& g, const Colouring& c, Mode mode) {
  return mode == Mode::J ? is_j_feasible(g, c) : is_j_star_feasible(g, c);
}

inline bool is_constrained(const Graph& g, Vertex v, Mode mode) {
  return mode == Mode::J || is_internal(g, v);
}

/// Largest palette that can possibly satisfy `mode`.
///
/// A constrained vertex sees at most deg(v)+1 colours, so the bound is the
/// minimum of deg(v)+1 over constrained vertices: δ(G)+1 for J. In JStar
/// mode pendant vertices are unconstrained, and a graph with no internal
/// vertex is bounded only by its order.
inline int palette_bound(const Graph& g, Mode mode) {
  int bound = g.order();
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_constrained(g, v, mode)) bound = std::min(bound, g.degree(v) + 1);
  return bound;
}

namespace detail {

inline void require_solver_input(const Graph& g) {
  if (g.order() < 1) throw ValidationError("graph must have at least one vertex");
  if (!is_connected(g)) throw ConnectivityError("graph is not connected");
}

inline void require_palette(const Graph& g, int k) {
  if (k < 1 || k > g.order())
    throw ValidationError("palette size " + std::to_string(k) + " outside 1.." + std::to_string(g.order()));
}

// Depth-first search over vertices in descending-degree order.
//
// Prunes on propriety, surjectivity (unused colours must fit in the
// remaining vertices) and rainbow completability. For each constrained v the
// colours still missing from N[v] must not outnumber the uncoloured vertices
// of N[v], and every missing colour already in use must be placeable on some
// uncoloured vertex of N[v] with no neighbour of that colour. Colours are
// introduced in first-use order, so the search only visits one
// representative per colour permutation.
class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, int k, Mode mode)
      : g_(g), k_(k), n_(g.order()), colour_(n_, 0), seen_(n_, std::vector<int>(k + 1, 0)),
        distinct_(n_, 0), uncoloured_(n_), constrained_(n_), ball_(n_) {
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      order_[v] = v;
      uncoloured_[v] = g.degree(v) + 1;
      constrained_[v] = is_constrained(g, v, mode);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // Colouring v changes the state of N[v], which is visible to the
    // constrained vertices within distance two.
    std::vector<int> stamp(n_, -1);
    for (Vertex v = 0; v < n_; ++v) {
      auto visit = [&](Vertex w) {
        if (stamp[w] != v && constrained_[w]) ball_[v].push_back(w);
        stamp[w] = v;
      };
      visit(v);
      for (Vertex u : g.neighbours(v)) {
        visit(u);
        for (Vertex w : g.neighbours(u)) visit(w);
      }
    }
  }

  std::optional<std::vector<Colour>> run() {
    if (extend(0, 0)) return colour_;
    return std::nullopt;
  }

 private:
  bool extend(int depth, int used) {
    if (depth == n_) return used == k_;
    if (k_ - used > n_ - depth) return false;

    const Vertex v = order_[depth];
    const int top = std::min(k_, used + 1);
    for (Colour c = 1; c <= top; ++c) {
      if (seen_[v][c] != 0) continue;  // a neighbour already has c
      const int now_used = std::max(used, c);
      assign(v, c);
      if (completable_around(v, now_used) && extend(depth + 1, now_used)) return true;
      unassign(v, c);
    }
    return false;
  }

  bool completable_around(Vertex v, int used) const {
    for (Vertex w : ball_[v])
      if (!completable(w, used)) return false;
    return true;
  }

  bool completable(Vertex w, int used) const {
    if (k_ - distinct_[w] > uncoloured_[w]) return false;
    if (uncoloured_[w] == 0) return true;
    for (Colour c = 1; c <= used; ++c) {
      if (seen_[w][c] != 0) continue;
      bool placeable = colour_[w] == 0 && seen_[w][c] == 0;
      for (auto it = g_.neighbours(w).begin(); !placeable && it != g_.neighbours(w).end(); ++it)
        placeable = colour_[*it] == 0 && seen_[*it][c] == 0;
      if (!placeable) return false;
    }
    return true;
  }

  void assign(Vertex v, Colour c) {
    colour_[v] = c;
    touch(v, c);
    for (Vertex u : g_.neighbours(v)) touch(u, c);
  }

  void touch(Vertex w, Colour c) {
    if (seen_[w][c]++ == 0) ++distinct_[w];
    --uncoloured_[w];
  }

  void unassign(Vertex v, Colour c) {
    untouch(v, c);
    for (Vertex u : g_.neighbours(v)) untouch(u, c);
    colour_[v] = 0;
  }

  void untouch(Vertex w, Colour c) {
    if (--seen_[w][c] == 0) --distinct_[w];
    ++uncoloured_[w];
  }

  const Graph& g_;
  const int k_;
  const int n_;
  std::vector<Vertex> order_;
  std::vector<Colour> colour_;
  std::vector<std::vector<int>> seen_;  // seen_[v][c]: vertices of N[v] with colour c
  std::vector<int> distinct_;           // distinct colours present in N[v]
  std::vector<int> uncoloured_;         // uncoloured vertices of N[v]
  std::vector<char> constrained_;
  std::vector<std::vector<Vertex>> ball_;  // constrained vertices within distance 2
};

}  // namespace detail

/// A proper, surjective k-colouring meeting the rainbow condition of `mode`,
/// or nullopt when none exists. Deterministic; the certificate is the first
/// solution found in search order, with colours renamed by first appearance
/// along vertex labels.
inline std::optional<Colouring> find_colouring(const Graph& g, int k, Mode mode) {
  detail::require_solver_input(g);
  detail::require_palette(g, k);
  auto found = detail::RainbowSearch(g, k, mode).run();
  if (!found) return std::nullopt;
  return Colouring(k, std::move(*found)).normalised();
}

struct SolveOptions {
  bool per_k = false;     // evaluate every k in 1..bound instead of stopping at the first hit
  bool parallel = false;  // evaluate palette sizes concurrently; the outcome is unchanged
};

struct KFeasibility {
  int k;
  bool feasible;

  friend bool operator==(const KFeasibility&, const KFeasibility&) = default;
};

/// Result of the maximum-palette search.
struct JOutcome {
  Mode mode = Mode::J;
  std::optional<int> k;  // empty when not colourable
  std::optional<Colouring> certificate;
  std::vector<KFeasibility> per_k;  // ascending k; empty unless requested
  int delta_plus_one = 0;
  int bound = 0;  // palette_bound(g, mode): largest k searched

  bool colourable() const noexcept { return k.has_value(); }
};

/// 𝒥(G) for Mode::J, 𝒥*(G) for Mode::JStar.
///
/// Palette sizes are scanned from palette_bound() downwards. Feasibility is
/// not monotone in k (C_9 admits 3 colours but not 2), so every size is
/// tried rather than bisected.
inline JOutcome j_number(const Graph& g, Mode mode, const SolveOptions& opts = {}) {
  detail::require_solver_input(g);
  JOutcome out;
  out.mode = mode;
  out.delta_plus_one = min_degree(g) + 1;
  out.bound = palette_bound(g, mode);

  std::vector<std::optional<Colouring>> results(out.bound + 1);
  if (opts.parallel) {
    std::vector<std::future<std::optional<Colouring>>> jobs;
    for (int k = 1; k <= out.bound; ++k)
      jobs.push_back(std::async(std::launch::async, [&g, k, mode] { return find_colouring(g, k, mode); }));
    for (int k = 1; k <= out.bound; ++k) results[k] = jobs[k - 1].get();
  } else {
    for (int k = out.bound; k >= 1; --k) {
      results[k] = find_colouring(g, k, mode);
      if (results[k] && !opts.per_k) break;
    }
  }

  for (int k = out.bound; k >= 1; --k)
    if (results[k]) {
      out.k = k;
      out.certificate = results[k];
      break;
    }
  if (opts.per_k)
    for (int k = 1; k <= out.bound; ++k) out.per_k.push_back({k, results[k].has_value()});
  return out;
}

}  // namespace jrainbow
