#pragma once

// Command-line front end. `run_cli` is the whole program minus process
// plumbing, so it can be driven from tests with string streams.
//
// Exit codes: 0 success, 1 parse/validation/usage error, 2 not colourable
// (solve --strict) or infeasible colouring (verify), 3 oracle budget
// exceeded, 4 oracle mismatch.

#include <jrainbow/catalogue.hpp>
#include <jrainbow/colouring.hpp>
#include <jrainbow/errors.hpp>
#include <jrainbow/families.hpp>
#include <jrainbow/io.hpp>
#include <jrainbow/json.hpp>
#include <jrainbow/oracle.hpp>
#include <jrainbow/solver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jrainbow::cli {

enum ExitCode : int {
  ok = 0,
  invalid_input = 1,
  not_colourable = 2,
  budget_exceeded = 3,
  oracle_mismatch = 4,
};

namespace detail {

inline std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

inline bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline GraphFormat sniff_format(const std::string& path, const std::string& text) {
  if (ends_with(path, ".col") || ends_with(path, ".dimacs")) return GraphFormat::Dimacs;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream tok(line);
    std::string first;
    if (!(tok >> first) || first[0] == '#') continue;
    return (first == "p" || first == "c" || first == "e") ? GraphFormat::Dimacs : GraphFormat::EdgeList;
  }
  return GraphFormat::EdgeList;
}

// A graph source is a file path, "-" for stdin, or "family:<kind>:<params>".
inline Graph load_graph(const std::string& source, const std::string& format) {
  if (source.rfind("family:", 0) == 0) {
    const auto rest = source.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ValidationError("expected family:<kind>:<params>, got '" + source + "'");
    return generate_family(parse_family(rest.substr(0, colon), rest.substr(colon + 1)));
  }
  const auto text = read_source(source);
  return parse_graph(text, format.empty() ? sniff_format(source, text) : parse_format(format));
}

inline Colouring load_colouring(const std::string& source) {
  const auto text = read_source(source);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON colouring: ") + e.what());
    }
    return colouring_from_json(doc);
  }
  return parse_colouring_lines(text);
}

inline std::string join(std::span<const int> xs, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(xs[i]);
  return out;
}

inline std::string per_k_text(const std::vector<KFeasibility>& per_k) {
  std::string out;
  for (auto [k, feasible] : per_k) out += (out.empty() ? "" : " ") + std::to_string(k) + (feasible ? ":yes" : ":no");
  return out;
}

inline void print_outcome_text(std::ostream& out, const JOutcome& o) {
  out << std::left << std::setw(16) << "mode" << mode_name(o.mode) << '\n'
      << std::setw(16) << "status" << (o.colourable() ? "colourable" : "not_colourable") << '\n';
  if (o.k) out << std::setw(16) << "k" << *o.k << '\n';
  if (o.certificate) out << std::setw(16) << "certificate" << join(o.certificate->colours()) << '\n';
  out << std::setw(16) << "delta_plus_one" << o.delta_plus_one << '\n'
      << std::setw(16) << "bound" << o.bound << '\n';
  if (!o.per_k.empty()) out << std::setw(16) << "per_k" << per_k_text(o.per_k) << '\n';
}

struct RangeSpec {
  int first;
  int last;
};

inline RangeSpec parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    RangeSpec r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.first > r.last) throw ValidationError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw ValidationError("expected a range like 3..12, got '" + text + "'");
  }
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact J- and J*-colouring solver, verifier and statistics toolkit", "jrainbow"};
  app.require_subcommand(1, 1);

  std::string mode_text = "J", format, graph_source, colouring_source, kind, params, range_text;
  bool json = false, strict = false, canonical = false, per_k = false;
  std::optional<std::uint64_t> budget;

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_text, "J or Jstar")->check(CLI::IsMember({"J", "Jstar", "j", "jstar"}));
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "JSON output"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "edge-list or dimacs (default: by extension/content)")
        ->check(CLI::IsMember({"edge-list", "dimacs"}));
  };
  const std::string source_help = "graph file, '-' for stdin, or family:<kind>:<params>";

  auto* family_cmd = app.add_subcommand("family", "print a generated family instance");
  family_cmd->add_option("kind", kind, "path|cycle|complete|star|wheel|multipartite")->required();
  family_cmd->add_option("params", params, "n, or comma-separated part sizes")->required();
  add_format(family_cmd);
  add_json(family_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "compute the J (or J*) colouring number with a certificate");
  solve_cmd->add_option("graph", graph_source, source_help)->required();
  add_mode(solve_cmd);
  add_json(solve_cmd);
  add_format(solve_cmd);
  solve_cmd->add_flag("--strict", strict, "exit 2 when not colourable");
  solve_cmd->add_flag("--canonical", canonical, "sequential search only");
  solve_cmd->add_flag("--per-k", per_k, "report feasibility of every palette size");

  auto* verify_cmd = app.add_subcommand("verify", "check a colouring; exit 0 iff feasible for the mode");
  verify_cmd->add_option("graph", graph_source, source_help)->required();
  verify_cmd->add_option("colouring", colouring_source, "one colour per line, or {\"k\",\"colors\"} JSON")
      ->required();
  add_mode(verify_cmd);
  add_json(verify_cmd);
  add_format(verify_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "colour-class distribution, mean and variance");
  stats_cmd->add_option("graph", graph_source, source_help)->required();
  stats_cmd->add_option("colouring", colouring_source, "colouring file")->required();
  add_json(stats_cmd);
  add_format(stats_cmd);

  auto* predict_cmd = app.add_subcommand("predict", "closed-form values for a family instance");
  predict_cmd->add_option("kind", kind, "path|cycle|complete|star|wheel|multipartite")->required();
  predict_cmd->add_option("params", params, "n, or comma-separated part sizes")->required();
  add_json(predict_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "cross-check the solver against exhaustive enumeration");
  oracle_cmd->add_option("graph", graph_source, source_help)->required();
  oracle_cmd->add_option("--budget", budget, "maximum k^n assignments (default 1e8 or $JRAINBOW_BUDGET)");
  add_mode(oracle_cmd);
  add_json(oracle_cmd);
  add_format(oracle_cmd);

  auto* table_cmd = app.add_subcommand("table", "solver vs closed form over a range of n");
  table_cmd->add_option("family", kind, "path|cycle|complete|star|wheel")->required();
  table_cmd->add_option("range", range_text, "a..b")->required();
  add_mode(table_cmd);
  add_json(table_cmd);

  std::vector<const char*> argv{"jrainbow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  try {
    const Mode mode = parse_mode(mode_text);

    if (*family_cmd) {
      const Graph g = generate_family(parse_family(kind, params));
      if (json) {
        Json edges = Json::array();
        for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
        out << Json{{"n", g.order()}, {"edges", edges}}.dump() << '\n';
      } else {
        out << serialize_graph(g, format.empty() ? GraphFormat::EdgeList : parse_format(format));
      }
      return ok;
    }

    if (*solve_cmd) {
      const Graph g = detail::load_graph(graph_source, format);
      const auto outcome = j_number(g, mode, SolveOptions{.per_k = per_k, .parallel = !canonical});
      if (json) out << outcome_json(outcome).dump() << '\n';
      else detail::print_outcome_text(out, outcome);
      return strict && !outcome.colourable() ? not_colourable : ok;
    }

    if (*verify_cmd) {
      const Graph g = detail::load_graph(graph_source, format);
      const Colouring c = detail::load_colouring(colouring_source);
      if (c.order() != g.order())
        throw ValidationError("colouring has " + std::to_string(c.order()) + " entries, graph has " +
                              std::to_string(g.order()) + " vertices");
      const bool proper = is_proper(g, c);
      const bool surjective = c.is_surjective();
      std::vector<Vertex> rainbow;
      if (surjective) rainbow = rainbow_vertices(g, c);
      const bool feasible = is_feasible(g, c, mode);
      if (json) {
        out << Json{{"mode", mode_name(mode)},
                    {"k", c.palette_size()},
                    {"proper", proper},
                    {"surjective", surjective},
                    {"rainbow_vertices", rainbow},
                    {"feasible", feasible}}
                   .dump()
            << '\n';
      } else {
        out << std::left << std::setw(12) << "mode" << mode_name(mode) << '\n'
            << std::setw(12) << "k" << c.palette_size() << '\n'
            << std::setw(12) << "proper" << (proper ? "yes" : "no") << '\n'
            << std::setw(12) << "surjective" << (surjective ? "yes" : "no") << '\n'
            << std::setw(12) << "rainbow" << detail::join(rainbow) << '\n'
            << std::setw(12) << "feasible" << (feasible ? "yes" : "no") << '\n';
      }
      return feasible ? ok : not_colourable;
    }

    if (*stats_cmd) {
      const Graph g = detail::load_graph(graph_source, format);
      const Colouring c = detail::load_colouring(colouring_source);
      const auto d = colour_distribution(g, c);
      if (json) {
        out << distribution_json(d).dump() << '\n';
      } else {
        std::string pmf;
        for (const auto& f : d.pmf) pmf += (pmf.empty() ? "" : " ") + to_string(f);
        out << std::left << std::setw(10) << "theta" << detail::join(d.theta) << '\n'
            << std::setw(10) << "pmf" << pmf << '\n'
            << std::setw(10) << "mean" << to_string(j_mean(d)) << '\n'
            << std::setw(10) << "variance" << to_string(j_variance(d)) << '\n';
      }
      return ok;
    }

    if (*predict_cmd) {
      const auto p = predict(parse_family(kind, params));
      if (json) {
        out << prediction_json(p).dump() << '\n';
      } else {
        auto opt = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("-"); };
        auto stat = [](const std::optional<Rational>& x, const std::optional<StatProvenance>& prov) {
          if (!x) return std::string("-");
          std::string s = to_string(*x);
          if (prov && !prov->paper_consistent) s += "  (paper-discrepant; printed " + to_string(prov->paper_value) + ")";
          return s;
        };
        out << std::left << std::setw(14) << "family" << to_string(p.family) << '\n'
            << std::setw(14) << "colourable" << (p.colourable ? "yes" : "no") << '\n'
            << std::setw(14) << "j_number" << opt(p.j_number) << '\n'
            << std::setw(14) << "j_star_number" << opt(p.j_star_number) << '\n'
            << std::setw(14) << "mean" << stat(p.mean, p.mean_provenance) << '\n'
            << std::setw(14) << "variance" << stat(p.variance, p.variance_provenance) << '\n';
      }
      return ok;
    }

    if (*oracle_cmd) {
      const Graph g = detail::load_graph(graph_source, format);
      const auto report = cross_check(g, mode, budget.value_or(budget_from_environment()));
      if (json) {
        out << cross_check_json(report).dump() << '\n';
      } else {
        auto k_text = [](const JOutcome& o) { return o.k ? std::to_string(*o.k) : std::string("not_colourable"); };
        out << std::left << std::setw(10) << "mode" << mode_name(mode) << '\n'
            << std::setw(10) << "solver" << k_text(report.solver) << "  [" << detail::per_k_text(report.solver.per_k)
            << "]\n"
            << std::setw(10) << "oracle" << k_text(report.oracle) << "  [" << detail::per_k_text(report.oracle.per_k)
            << "]\n"
            << std::setw(10) << "match" << (report.match ? "yes" : "no") << '\n';
      }
      return report.match ? ok : oracle_mismatch;
    }

    if (*table_cmd) {
      const auto range = detail::parse_range(range_text);
      if (kind == "multipartite") throw ValidationError("table needs a single-parameter family");
      Json rows = Json::array();
      if (!json)
        out << std::left << std::setw(6) << "n" << std::setw(12) << "colourable" << std::setw(6) << "J"
            << std::setw(12) << "predicted" << "agrees\n";
      for (int n = range.first; n <= range.last; ++n) {
        const auto spec = parse_family(kind, std::to_string(n));
        const auto solved = j_number(generate_family(spec), mode, SolveOptions{.parallel = true});
        const auto p = predict(spec);
        const auto predicted = mode == Mode::J ? p.j_number : p.j_star_number;
        const bool agrees = solved.k == predicted;
        if (json) {
          Json row{{"n", n}, {"colourable", solved.colourable()}};
          row["j"] = solved.k ? Json(*solved.k) : Json(nullptr);
          row["predicted"] = predicted ? Json(*predicted) : Json(nullptr);
          row["agrees"] = agrees;
          rows.push_back(row);
        } else {
          out << std::setw(6) << n << std::setw(12) << (solved.colourable() ? "yes" : "no") << std::setw(6)
              << (solved.k ? std::to_string(*solved.k) : "-") << std::setw(12)
              << (predicted ? std::to_string(*predicted) : "-") << (agrees ? "yes" : "NO") << '\n';
        }
      }
      if (json) out << Json{{"family", kind}, {"mode", mode_name(mode)}, {"rows", rows}}.dump() << '\n';
      return ok;
    }
  } catch (const BudgetError& e) {
    err << "jrainbow: " << e.what() << '\n';
    return budget_exceeded;
  } catch (const Error& e) {
    err << "jrainbow: " << e.what() << '\n';
    return invalid_input;
  }
  return invalid_input;
}

}  // namespace jrainbow::cli
