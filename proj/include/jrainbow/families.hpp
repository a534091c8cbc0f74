#pragma once

#include <jrainbow/errors.hpp>
#include <jrainbow/graph.hpp>

#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace jrainbow {

namespace family {

struct Path { int n; };                                // P_n, n >= 1
struct Cycle { int n; };                               // C_n, n >= 3
struct Complete { int n; };                            // K_n, n >= 1
struct Star { int n; };                                // K_{1,n-1}, n >= 2 vertices in total
struct Wheel { int n; };                               // W_{n+1}: n rim vertices plus a hub
struct CompleteMultipartite { std::vector<int> parts; };  // K_{n_1,...,n_l}, l >= 2

}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::Star,
                                family::Wheel, family::CompleteMultipartite>;

namespace detail {

inline void require(bool ok, const char* parameter, const std::string& why) {
  if (!ok) throw ValidationError(std::string("parameter '") + parameter + "' " + why);
}

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

inline void validate(const FamilySpec& spec) {
  std::visit(detail::overloaded{
                 [](const family::Path& s) { detail::require(s.n >= 1, "n", "of path must be >= 1"); },
                 [](const family::Cycle& s) { detail::require(s.n >= 3, "n", "of cycle must be >= 3"); },
                 [](const family::Complete& s) {
                   detail::require(s.n >= 1, "n", "of complete graph must be >= 1");
                 },
                 [](const family::Star& s) {
                   detail::require(s.n >= 2, "n", "of star (total vertices) must be >= 2");
                 },
                 [](const family::Wheel& s) {
                   detail::require(s.n >= 3, "n", "of wheel (rim vertices) must be >= 3");
                 },
                 [](const family::CompleteMultipartite& s) {
                   detail::require(s.parts.size() >= 2, "parts", "must list at least 2 parts");
                   for (int p : s.parts) detail::require(p >= 1, "parts", "sizes must each be >= 1");
                 },
             },
             spec);
}

/// Number of vertices of the generated instance.
inline int family_order(const FamilySpec& spec) {
  return std::visit(detail::overloaded{
                        [](const family::Wheel& s) { return s.n + 1; },
                        [](const family::CompleteMultipartite& s) {
                          return std::accumulate(s.parts.begin(), s.parts.end(), 0);
                        },
                        [](const auto& s) { return s.n; },
                    },
                    spec);
}

/// Canonical labelled instance. Paths and cycles run 0..n-1 in order; a
/// wheel's rim is 0..n-1 in cycle order with hub n; multipartite parts take
/// consecutive label blocks in the given order; a star's hub is 0.
inline Graph generate_family(const FamilySpec& spec) {
  validate(spec);
  std::vector<Edge> edges;
  const int order = family_order(spec);
  std::visit(detail::overloaded{
                 [&](const family::Path& s) {
                   for (int i = 0; i + 1 < s.n; ++i) edges.emplace_back(i, i + 1);
                 },
                 [&](const family::Cycle& s) {
                   for (int i = 0; i < s.n; ++i) edges.emplace_back(i, (i + 1) % s.n);
                 },
                 [&](const family::Complete& s) {
                   for (int u = 0; u < s.n; ++u)
                     for (int v = u + 1; v < s.n; ++v) edges.emplace_back(u, v);
                 },
                 [&](const family::Star& s) {
                   for (int v = 1; v < s.n; ++v) edges.emplace_back(0, v);
                 },
                 [&](const family::Wheel& s) {
                   for (int i = 0; i < s.n; ++i) {
                     edges.emplace_back(i, (i + 1) % s.n);
                     edges.emplace_back(i, s.n);
                   }
                 },
                 [&](const family::CompleteMultipartite& s) {
                   std::vector<int> part_of;
                   for (std::size_t p = 0; p < s.parts.size(); ++p)
                     part_of.insert(part_of.end(), s.parts[p], static_cast<int>(p));
                   for (int u = 0; u < order; ++u)
                     for (int v = u + 1; v < order; ++v)
                       if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
                 },
             },
             spec);
  return Graph(order, edges);
}

/// Human-readable name, e.g. "wheel 9" or "multipartite 2,2,2".
inline std::string to_string(const FamilySpec& spec) {
  return std::visit(detail::overloaded{
                        [](const family::Path& s) { return "path " + std::to_string(s.n); },
                        [](const family::Cycle& s) { return "cycle " + std::to_string(s.n); },
                        [](const family::Complete& s) { return "complete " + std::to_string(s.n); },
                        [](const family::Star& s) { return "star " + std::to_string(s.n); },
                        [](const family::Wheel& s) { return "wheel " + std::to_string(s.n); },
                        [](const family::CompleteMultipartite& s) {
                          std::string out = "multipartite ";
                          for (std::size_t i = 0; i < s.parts.size(); ++i)
                            out += (i ? "," : "") + std::to_string(s.parts[i]);
                          return out;
                        },
                    },
                    spec);
}

/// Parses a family kind plus its parameter text ("5", or "2,2,2" for
/// multipartite). Result is validated.
inline FamilySpec parse_family(const std::string& kind, const std::string& params) {
  auto parse_int = [&](const std::string& text) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size())
      throw ValidationError("expected an integer parameter for '" + kind + "', got '" + text + "'");
    return value;
  };

  FamilySpec spec;
  if (kind == "path") spec = family::Path{parse_int(params)};
  else if (kind == "cycle") spec = family::Cycle{parse_int(params)};
  else if (kind == "complete") spec = family::Complete{parse_int(params)};
  else if (kind == "star") spec = family::Star{parse_int(params)};
  else if (kind == "wheel") spec = family::Wheel{parse_int(params)};
  else if (kind == "multipartite") {
    family::CompleteMultipartite m;
    std::stringstream ss(params);
    for (std::string item; std::getline(ss, item, ',');) m.parts.push_back(parse_int(item));
    spec = m;
  } else {
    throw ValidationError("unknown graph family '" + kind +
                          "' (expected path, cycle, complete, star, wheel or multipartite)");
  }
  validate(spec);
  return spec;
}

}  // namespace jrainbow
