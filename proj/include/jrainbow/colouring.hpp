#pragma once

#include <jrainbow/errors.hpp>
#include <jrainbow/graph.hpp>
#include <jrainbow/rational.hpp>

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jrainbow {

using Colour = int;

/// Vertex colouring with palette 1..k.
///
/// Construction rejects colours outside 1..k. Surjectivity is a property
/// (`is_surjective`) rather than a construction invariant so that candidate
/// colourings can be loaded and then rejected by the feasibility checks.
class Colouring {
 public:
  Colouring() = default;

  Colouring(int k, std::vector<Colour> assignment) : k_(k), colours_(std::move(assignment)) {
    if (k < 1) throw ValidationError("palette size must be >= 1, got " + std::to_string(k));
    for (std::size_t v = 0; v < colours_.size(); ++v)
      if (colours_[v] < 1 || colours_[v] > k)
        throw ValidationError("vertex " + std::to_string(v) + " has colour " +
                              std::to_string(colours_[v]) + " outside 1.." + std::to_string(k));
  }

  /// Palette size taken as the largest colour used.
  static Colouring from_assignment(std::vector<Colour> assignment) {
    int k = assignment.empty() ? 1 : *std::max_element(assignment.begin(), assignment.end());
    return Colouring(k, std::move(assignment));
  }

  int palette_size() const noexcept { return k_; }
  int order() const noexcept { return static_cast<int>(colours_.size()); }
  Colour operator[](Vertex v) const { return colours_.at(v); }
  std::span<const Colour> colours() const noexcept { return colours_; }

  bool is_surjective() const {
    std::vector<char> used(k_ + 1, 0);
    int distinct = 0;
    for (Colour c : colours_) distinct += !std::exchange(used[c], 1);
    return distinct == k_;
  }

  /// Colours renamed so that their first appearances, scanning vertices
  /// 0..n-1, read 1, 2, 3, ...
  Colouring normalised() const {
    std::vector<Colour> rename(k_ + 1, 0);
    Colour next = 0;
    std::vector<Colour> out(colours_.size());
    for (std::size_t v = 0; v < colours_.size(); ++v) {
      Colour& r = rename[colours_[v]];
      if (r == 0) r = ++next;
      out[v] = r;
    }
    return Colouring(k_, std::move(out));
  }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  int k_ = 1;
  std::vector<Colour> colours_;
};

namespace detail {

inline void require_covers(const Graph& g, const Colouring& c) {
  if (c.order() != g.order())
    throw ValidationError("colouring assigns " + std::to_string(c.order()) + " vertices but graph has " +
                          std::to_string(g.order()));
}

}  // namespace detail

inline bool is_proper(const Graph& g, const Colouring& c) {
  detail::require_covers(g, c);
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

/// Vertices whose closed neighbourhood shows every palette colour.
/// Throws ValidationError for a non-surjective colouring, since an unused
/// palette colour would make the answer vacuously empty.
inline std::vector<Vertex> rainbow_vertices(const Graph& g, const Colouring& c) {
  detail::require_covers(g, c);
  if (!c.is_surjective())
    throw ValidationError("colouring does not use all " + std::to_string(c.palette_size()) + " colours");
  const int k = c.palette_size();
  std::vector<Vertex> out;
  std::vector<int> stamp(k + 1, -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    int seen = 0;
    auto mark = [&](Vertex u) {
      if (stamp[c[u]] != v) {
        stamp[c[u]] = v;
        ++seen;
      }
    };
    mark(v);
    for (Vertex u : g.neighbours(v)) mark(u);
    if (seen == k) out.push_back(v);
  }
  return out;
}

/// Proper, surjective, and every vertex rainbow.
inline bool is_j_feasible(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c) || !c.is_surjective()) return false;
  return static_cast<int>(rainbow_vertices(g, c).size()) == g.order();
}

/// Proper, surjective, and every internal (degree >= 2) vertex rainbow.
inline bool is_j_star_feasible(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c) || !c.is_surjective()) return false;
  const auto rainbow = rainbow_vertices(g, c);
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_internal(g, v) && !std::binary_search(rainbow.begin(), rainbow.end(), v)) return false;
  return true;
}

/// Colour-class sizes and p.m.f. in canonical class order: size
/// non-increasing, ties broken by the smallest vertex in the class.
struct ColourDistribution {
  std::vector<int> theta;
  std::vector<Rational> pmf;
  int n = 0;

  friend bool operator==(const ColourDistribution&, const ColourDistribution&) = default;
};

inline ColourDistribution colour_distribution(const Graph& g, const Colouring& c) {
  detail::require_covers(g, c);
  if (!c.is_surjective())
    throw ValidationError("colour distribution needs a surjective colouring");
  const int k = c.palette_size();
  const int n = c.order();

  struct ColourClass {
    int size = 0;
    Vertex first = 0;
  };
  std::vector<ColourClass> classes(k);
  for (Vertex v = n - 1; v >= 0; --v) {
    auto& cls = classes[c[v] - 1];
    ++cls.size;
    cls.first = v;
  }
  std::sort(classes.begin(), classes.end(), [](const ColourClass& a, const ColourClass& b) {
    return a.size != b.size ? a.size > b.size : a.first < b.first;
  });

  ColourDistribution d;
  d.n = n;
  for (const auto& cls : classes) {
    d.theta.push_back(cls.size);
    d.pmf.emplace_back(cls.size, n);
  }
  return d;
}

/// Σ i·f(i) over canonical indices i = 1..k.
inline Rational j_mean(const ColourDistribution& d) {
  Rational sum = 0;
  for (std::size_t i = 0; i < d.pmf.size(); ++i) sum += static_cast<std::int64_t>(i + 1) * d.pmf[i];
  return sum;
}

/// Σ i²·f(i) − (Σ i·f(i))².
inline Rational j_variance(const ColourDistribution& d) {
  Rational second = 0;
  for (std::size_t i = 0; i < d.pmf.size(); ++i) {
    const auto idx = static_cast<std::int64_t>(i + 1);
    second += idx * idx * d.pmf[i];
  }
  const Rational mean = j_mean(d);
  return second - mean * mean;
}

}  // namespace jrainbow
