#pragma once

#include <jrainbow/colouring.hpp>
#include <jrainbow/errors.hpp>
#include <jrainbow/graph.hpp>
#include <jrainbow/solver.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace jrainbow {

inline constexpr std::uint64_t default_oracle_budget = 100'000'000;

/// k^n, or nullopt if it exceeds `cap`.
inline std::optional<std::uint64_t> assignment_count(int k, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / static_cast<std::uint64_t>(k)) return std::nullopt;
    total *= static_cast<std::uint64_t>(k);
  }
  return total;
}

/// Exhaustive reference search.
///
/// Walks all k^n assignments in lexicographic order (vertex 0 most
/// significant, colours 1..k) and returns the first one that is proper,
/// surjective and rainbow for `mode`. No pruning and no symmetry breaking;
/// checks use an adjacency matrix built here rather than the library's
/// feasibility predicates.
inline std::optional<Colouring> brute_force(const Graph& g, int k, Mode mode,
                                            std::uint64_t budget = default_oracle_budget) {
  detail::require_solver_input(g);
  detail::require_palette(g, k);
  const int n = g.order();
  if (!assignment_count(k, n, budget))
    throw BudgetError("oracle needs " + std::to_string(k) + "^" + std::to_string(n) +
                      " assignments, over the budget of " + std::to_string(budget));

  std::vector<std::vector<char>> adj(g.order());
  std::vector<int> deg(g.order(), 0);
  for (auto& row : adj) row.assign(adj.size(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u][v] = adj[v][u] = 1;
    ++deg[u];
    ++deg[v];
  }
  std::vector<Vertex> must_see_all;
  for (Vertex v = 0; v < n; ++v)
    if (mode == Mode::J || deg[v] >= 2) must_see_all.push_back(v);
  const auto edges = g.edges();
  const std::uint64_t full = k == 64 ? ~0ULL : ((1ULL << k) - 1);

  auto satisfies = [&](const std::vector<int>& a) {
    for (auto [u, v] : edges)
      if (a[u] == a[v]) return false;
    std::uint64_t used = 0;
    for (int c : a) used |= 1ULL << c;
    if (used != full) return false;
    for (Vertex v : must_see_all) {
      std::uint64_t seen = 1ULL << a[v];
      for (Vertex u = 0; u < n; ++u)
        if (adj[v][u]) seen |= 1ULL << a[u];
      if (seen != full) return false;
    }
    return true;
  };

  // Colours are stored 0-based during enumeration.
  std::vector<int> a(n, 0);
  while (true) {
    if (satisfies(a)) {
      std::vector<Colour> out(n);
      for (int v = 0; v < n; ++v) out[v] = a[v] + 1;
      return Colouring(k, std::move(out));
    }
    int pos = n - 1;
    while (pos >= 0 && a[pos] == k - 1) a[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++a[pos];
  }
}

/// Maximum feasible palette by exhaustive search over every k in 1..bound.
inline JOutcome brute_force_maximum(const Graph& g, Mode mode, std::uint64_t budget = default_oracle_budget) {
  detail::require_solver_input(g);
  JOutcome out;
  out.mode = mode;
  out.delta_plus_one = min_degree(g) + 1;
  out.bound = palette_bound(g, mode);
  if (!assignment_count(out.bound, g.order(), budget))
    throw BudgetError("oracle needs " + std::to_string(out.bound) + "^" + std::to_string(g.order()) +
                      " assignments, over the budget of " + std::to_string(budget));
  for (int k = 1; k <= out.bound; ++k) {
    auto c = brute_force(g, k, mode, budget);
    out.per_k.push_back({k, c.has_value()});
    if (c) {
      out.k = k;
      out.certificate = std::move(c);
    }
  }
  return out;
}

struct CrossCheckReport {
  JOutcome solver;
  JOutcome oracle;
  bool certificates_verified = false;
  bool match = false;
};

/// Runs j_number and the exhaustive maximisation side by side. `match`
/// requires equal status, equal k, equal per-k vectors, and certificates
/// that both pass the feasibility check.
inline CrossCheckReport cross_check(const Graph& g, Mode mode, std::uint64_t budget = default_oracle_budget) {
  CrossCheckReport r;
  r.oracle = brute_force_maximum(g, mode, budget);
  r.solver = j_number(g, mode, SolveOptions{.per_k = true});
  auto verified = [&](const JOutcome& o) {
    return !o.certificate || (is_feasible(g, *o.certificate, mode) &&
                              o.certificate->palette_size() == *o.k);
  };
  r.certificates_verified = verified(r.solver) && verified(r.oracle);
  r.match = r.certificates_verified && r.solver.k == r.oracle.k && r.solver.per_k == r.oracle.per_k;
  return r;
}

/// Budget from JRAINBOW_BUDGET when set and valid, else the default.
inline std::uint64_t budget_from_environment() {
  if (const char* env = std::getenv("JRAINBOW_BUDGET")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return default_oracle_budget;
}

}  // namespace jrainbow
