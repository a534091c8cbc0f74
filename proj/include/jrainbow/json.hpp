#pragma once

// JSON documents produced and accepted by the command-line tool.

#include <jrainbow/catalogue.hpp>
#include <jrainbow/colouring.hpp>
#include <jrainbow/errors.hpp>
#include <jrainbow/oracle.hpp>
#include <jrainbow/solver.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <string_view>

namespace jrainbow {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

/// {"k": int, "colors": [int]}
inline Json colouring_json(const Colouring& c) {
  return Json{{"k", c.palette_size()}, {"colors", std::vector<int>(c.colours().begin(), c.colours().end())}};
}

inline Colouring colouring_from_json(const Json& j) {
  try {
    return Colouring(j.at("k").get<int>(), j.at("colors").get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("bad colouring document: ") + e.what());
  }
}

/// {"theta", "pmf", "mean", "variance"}; rationals as [num, den].
inline Json distribution_json(const ColourDistribution& d) {
  Json pmf = Json::array();
  for (const auto& f : d.pmf) pmf.push_back(rational_json(f));
  return Json{{"theta", d.theta},
              {"pmf", pmf},
              {"mean", rational_json(j_mean(d))},
              {"variance", rational_json(j_variance(d))}};
}

/// {"mode", "status", "k"?, "certificate"?, "per_k", "delta_plus_one", "bound"}
inline Json outcome_json(const JOutcome& o) {
  Json j{{"mode", mode_name(o.mode)}, {"status", o.colourable() ? "colourable" : "not_colourable"}};
  if (o.k) j["k"] = *o.k;
  if (o.certificate)
    j["certificate"] = std::vector<int>(o.certificate->colours().begin(), o.certificate->colours().end());
  Json per_k = Json::array();
  for (auto [k, feasible] : o.per_k) per_k.push_back(Json{{"k", k}, {"feasible", feasible}});
  j["per_k"] = per_k;
  j["delta_plus_one"] = o.delta_plus_one;
  j["bound"] = o.bound;
  return j;
}

inline Json cross_check_json(const CrossCheckReport& r) {
  return Json{{"mode", mode_name(r.solver.mode)},
              {"match", r.match},
              {"certificates_verified", r.certificates_verified},
              {"solver", outcome_json(r.solver)},
              {"oracle", outcome_json(r.oracle)}};
}

inline Json prediction_json(const ClosedFormPrediction& p) {
  Json j{{"family", to_string(p.family)}, {"colourable", p.colourable}};
  if (p.j_number) j["j_number"] = *p.j_number;
  if (p.j_star_number) j["j_star_number"] = *p.j_star_number;
  if (p.canonical_colouring) j["canonical_colouring"] = colouring_json(*p.canonical_colouring);
  if (p.distribution) j["distribution"] = distribution_json(*p.distribution);
  auto provenance = [](const StatProvenance& s) {
    Json out{{"tag", s.paper_consistent ? "paper-consistent" : "paper-discrepant"}};
    if (!s.paper_consistent) out["paper_value"] = rational_json(s.paper_value);
    return out;
  };
  if (p.mean_provenance || p.variance_provenance) {
    Json prov = Json::object();
    if (p.mean_provenance) prov["mean"] = provenance(*p.mean_provenance);
    if (p.variance_provenance) prov["variance"] = provenance(*p.variance_provenance);
    j["provenance"] = prov;
  }
  return j;
}

/// One colour per line, line i holding the 1-based colour of vertex i.
/// Blank lines and '#' comments are skipped. The palette is the largest
/// colour present.
inline Colouring parse_colouring_lines(std::string_view text) {
  std::istringstream src{std::string(text)};
  std::vector<Colour> colours;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(src, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    long long c = 0;
    if (!(in >> c)) {
      std::string token;
      if (std::istringstream(line) >> token) throw ParseError(line_no, "expected a colour, got '" + token + "'");
      continue;
    }
    std::string rest;
    if (in >> rest) throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
    if (c < 1 || c > std::numeric_limits<int>::max())
      throw ValidationError("line " + std::to_string(line_no) + ": colours are 1-based positive integers");
    colours.push_back(static_cast<Colour>(c));
  }
  if (colours.empty()) throw ParseError(line_no, "no colours found");
  return Colouring::from_assignment(std::move(colours));
}

}  // namespace jrainbow
