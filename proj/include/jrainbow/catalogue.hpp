#pragma once

#include <jrainbow/colouring.hpp>
#include <jrainbow/families.hpp>
#include <jrainbow/rational.hpp>

#include <optional>
#include <vector>

namespace jrainbow {

/// How a recomputed statistic compares with the formula printed in the
/// literature for that family.
struct StatProvenance {
  bool paper_consistent = true;
  Rational paper_value;  // the printed formula evaluated at this n
};

/// Closed-form J / J* facts for a named family instance.
///
/// j_number and j_star_number are the published values (J* for pendant-free
/// families equals J). Statistics are recomputed from the canonical
/// J-colouring construction, never copied from the printed formulas; the
/// provenance fields record whether the printed formula agrees.
struct ClosedFormPrediction {
  FamilySpec family;
  bool colourable = false;
  std::optional<int> j_number;
  std::optional<int> j_star_number;
  std::optional<Colouring> canonical_colouring;  // a J-colouring with j_number colours
  std::optional<ColourDistribution> distribution;
  std::optional<Rational> mean;
  std::optional<Rational> variance;
  std::optional<StatProvenance> mean_provenance;
  std::optional<StatProvenance> variance_provenance;
};

namespace detail {

struct PrintedStats {
  Rational mean;
  Rational variance;
};

inline std::vector<Colour> repeating(int n, int period) {
  std::vector<Colour> out(n);
  for (int i = 0; i < n; ++i) out[i] = i % period + 1;
  return out;
}

inline Rational r(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

// The statistics as printed for each family; some are arithmetically wrong
// and are kept only to be compared against.
inline std::optional<PrintedStats> printed_stats(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Complete& s) -> std::optional<PrintedStats> {
            const std::int64_t n = s.n;
            return PrintedStats{r(n + 1, 2), r(n * n - 1, 12)};
          },
          [](const family::Path& s) -> std::optional<PrintedStats> {
            const std::int64_t n = s.n;
            if (n % 2 == 0) return PrintedStats{r(3, 2), r(1, 4)};
            return PrintedStats{r(3 * n - 1, 2 * n), r(n * n - 1, 4 * n * n)};
          },
          [](const family::Cycle& s) -> std::optional<PrintedStats> {
            if (s.n % 3 == 0) return PrintedStats{r(1, 2), r(53, 12)};
            if (s.n % 2 == 0) return PrintedStats{r(3, 2), r(1, 4)};
            return std::nullopt;
          },
          [](const family::Wheel& s) -> std::optional<PrintedStats> {
            const std::int64_t n = s.n;
            if (n % 3 == 0) return PrintedStats{r(2 * n + 4, n + 1), r(2 * n * n + 14 * n, 3 * (n + 1) * (n + 1))};
            if (n % 2 == 0)
              return PrintedStats{r(3 * n + 6, 2 * (n + 1)), r(10 * n * n + 43 * n + 30, 4 * (n + 1) * (n + 1))};
            return std::nullopt;
          },
          [](const auto&) -> std::optional<PrintedStats> { return std::nullopt; },
      },
      spec);
}

inline bool cycle_colourable(int n) { return n % 2 == 0 || n % 3 == 0; }

inline std::vector<Colour> cycle_pattern(int n) { return repeating(n, n % 3 == 0 ? 3 : 2); }

}  // namespace detail

inline ClosedFormPrediction predict(const FamilySpec& spec) {
  validate(spec);
  ClosedFormPrediction p;
  p.family = spec;

  std::visit(detail::overloaded{
                 [&](const family::Path& s) {
                   p.colourable = true;
                   p.j_number = std::min(s.n, 2);
                   p.j_star_number = std::min(s.n, 3);
                   p.canonical_colouring = Colouring(*p.j_number, detail::repeating(s.n, 2));
                 },
                 [&](const family::Cycle& s) {
                   p.colourable = detail::cycle_colourable(s.n);
                   if (!p.colourable) return;
                   p.j_number = p.j_star_number = s.n % 3 == 0 ? 3 : 2;
                   p.canonical_colouring = Colouring(*p.j_number, detail::cycle_pattern(s.n));
                 },
                 [&](const family::Complete& s) {
                   p.colourable = true;
                   p.j_number = p.j_star_number = s.n;
                   p.canonical_colouring = Colouring(s.n, detail::repeating(s.n, s.n));
                 },
                 [&](const family::Star& s) {
                   // Only the hub is internal, so J* admits all-distinct colours.
                   p.colourable = true;
                   p.j_number = 2;
                   p.j_star_number = s.n;
                   std::vector<Colour> c(s.n, 2);
                   c[0] = 1;
                   p.canonical_colouring = Colouring(2, std::move(c));
                 },
                 [&](const family::Wheel& s) {
                   p.colourable = detail::cycle_colourable(s.n);
                   if (!p.colourable) return;
                   const int rim = s.n % 3 == 0 ? 3 : 2;
                   p.j_number = p.j_star_number = rim + 1;
                   auto c = detail::cycle_pattern(s.n);
                   c.push_back(rim + 1);
                   p.canonical_colouring = Colouring(rim + 1, std::move(c));
                 },
                 [&](const family::CompleteMultipartite& s) {
                   const int l = static_cast<int>(s.parts.size());
                   const int n = family_order(spec);
                   const bool star_like = l == 2 && std::min(s.parts[0], s.parts[1]) == 1 && n >= 3;
                   p.colourable = true;
                   p.j_number = l;
                   p.j_star_number = star_like ? n : l;
                   std::vector<Colour> c;
                   for (int i = 0; i < l; ++i) c.insert(c.end(), s.parts[i], i + 1);
                   p.canonical_colouring = Colouring(l, std::move(c));
                 },
             },
             spec);

  const auto printed = detail::printed_stats(spec);
  if (p.colourable && printed) {
    const Graph g = generate_family(spec);
    p.distribution = colour_distribution(g, *p.canonical_colouring);
    p.mean = j_mean(*p.distribution);
    p.variance = j_variance(*p.distribution);
    p.mean_provenance = StatProvenance{*p.mean == printed->mean, printed->mean};
    p.variance_provenance = StatProvenance{*p.variance == printed->variance, printed->variance};
  }
  return p;
}

}  // namespace jrainbow
