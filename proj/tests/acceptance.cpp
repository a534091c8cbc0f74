// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <jrainbow/jrainbow.hpp>

#include "support/generators.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace jrainbow;
using Clock = std::chrono::steady_clock;

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  int count() const { return count_; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string show(const std::optional<int>& k) { return k ? std::to_string(*k) : "none"; }

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(Check&, std::string&)> body;
};

// A1 graphs are reused by A9.
struct CorpusEntry {
  std::string name;
  Graph graph;
};

std::vector<CorpusEntry> a1_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& spec : testkit::family_corpus(8)) out.push_back({to_string(spec), generate_family(spec)});
  int i = 0;
  for (auto& g : testkit::random_corpus(300, 7, 20240611u))
    out.push_back({"random#" + std::to_string(i++), std::move(g)});
  return out;
}

void a1(Check& c, std::string& note) {
  const auto start = Clock::now();
  const auto corpus = a1_corpus();
  for (const auto& [name, g] : corpus)
    for (auto mode : {Mode::J, Mode::JStar}) {
      const auto solver = j_number(g, mode);
      const auto oracle = brute_force_maximum(g, mode);
      c.expect(solver.k == oracle.k, name + " mode " + std::string(mode_name(mode)) + ": solver " +
                                         show(solver.k) + " oracle " + show(oracle.k));
    }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 120.0, "runtime " + std::to_string(secs) + " s >= 120 s");
  std::ostringstream s;
  s << corpus.size() << " graphs x 2 modes, " << secs << " s";
  note = s.str();
}

void a2(Check& c, std::string&) {
  for (int n = 3; n <= 18; ++n) {
    const auto o = j_number(generate_family(family::Cycle{n}), Mode::J);
    const bool colourable = n % 2 == 0 || n % 3 == 0;
    c.expect(o.colourable() == colourable, "C_" + std::to_string(n) + " colourability");
    if (colourable) c.expect(o.k == (n % 3 == 0 ? 3 : 2), "J(C_" + std::to_string(n) + ") = " + show(o.k));
  }
}

void a3(Check& c, std::string&) {
  for (int n = 1; n <= 8; ++n) {
    const auto g = generate_family(family::Complete{n});
    c.expect(j_number(g, Mode::J).k == n, "solver J(K_" + std::to_string(n) + ")");
    c.expect(brute_force_maximum(g, Mode::J).k == n, "oracle J(K_" + std::to_string(n) + ")");
  }
  for (int total = 2; total <= 8; ++total)
    for (const auto& parts : testkit::partitions(total)) {
      const FamilySpec spec = family::CompleteMultipartite{parts};
      const auto g = generate_family(spec);
      const int l = static_cast<int>(parts.size());
      c.expect(j_number(g, Mode::J).k == l, "solver J(" + to_string(spec) + ")");
      c.expect(brute_force_maximum(g, Mode::J).k == l, "oracle J(" + to_string(spec) + ")");
    }
}

void a4(Check& c, std::string&) {
  auto wheel = [](int n) { return j_number(generate_family(family::Wheel{n}), Mode::J); };
  for (int n : {3, 6, 9, 12}) c.expect(wheel(n).k == 4, "J(W_" + std::to_string(n + 1) + ") != 4");
  for (int n : {4, 8, 10, 14}) c.expect(wheel(n).k == 3, "J(W_" + std::to_string(n + 1) + ") != 3");
  for (int n : {5, 7, 11, 13}) c.expect(!wheel(n).colourable(), "W_" + std::to_string(n + 1) + " colourable");
}

void a5(Check& c, std::string&) {
  for (int n = 3; n <= 12; ++n) {
    const auto g = generate_family(family::Path{n});
    c.expect(j_number(g, Mode::J).k == 2, "J(P_" + std::to_string(n) + ")");
    c.expect(j_number(g, Mode::JStar).k == 3, "J*(P_" + std::to_string(n) + ")");
  }
}

// Statistics of both the canonical construction and the solver's certificate.
void expect_stats(Check& c, const FamilySpec& spec, const Rational& mean, const std::optional<Rational>& variance) {
  const auto p = predict(spec);
  const auto g = generate_family(spec);
  const auto solved = j_number(g, Mode::J);
  const auto d_solver = colour_distribution(g, *solved.certificate);
  const auto name = to_string(spec);
  c.expect(p.mean == mean, name + " canonical mean " + (p.mean ? to_string(*p.mean) : "-"));
  c.expect(j_mean(d_solver) == mean, name + " certificate mean " + to_string(j_mean(d_solver)));
  c.expect(p.mean_provenance && p.mean_provenance->paper_consistent, name + " mean not tagged paper-consistent");
  if (variance) {
    c.expect(p.variance == *variance, name + " canonical variance " + (p.variance ? to_string(*p.variance) : "-"));
    c.expect(j_variance(d_solver) == *variance, name + " certificate variance " + to_string(j_variance(d_solver)));
    c.expect(p.variance_provenance && p.variance_provenance->paper_consistent,
             name + " variance not tagged paper-consistent");
  }
}

void a6(Check& c, std::string&) {
  for (std::int64_t n = 1; n <= 10; ++n)
    expect_stats(c, family::Complete{static_cast<int>(n)}, q(n + 1, 2), q(n * n - 1, 12));
  for (std::int64_t n = 1; n <= 11; ++n) {
    if (n % 2 == 0) expect_stats(c, family::Path{static_cast<int>(n)}, q(3, 2), q(1, 4));
    else expect_stats(c, family::Path{static_cast<int>(n)}, q(3 * n - 1, 2 * n), q(n * n - 1, 4 * n * n));
  }
  for (std::int64_t n : {3, 6, 9, 12})
    expect_stats(c, family::Wheel{static_cast<int>(n)}, q(2 * n + 4, n + 1),
                 q(2 * n * n + 14 * n, 3 * (n + 1) * (n + 1)));
  for (std::int64_t n : {4, 8, 10})
    expect_stats(c, family::Wheel{static_cast<int>(n)}, q(3 * n + 6, 2 * (n + 1)), std::nullopt);
}

// Recomputed values where the printed formulas are wrong. Route one is the
// closed form evaluated directly; route two is the distribution of a
// certificate checked by exhaustive search (or by the feasibility predicate
// beyond the oracle budget).
void a7(Check& c, std::string& note) {
  int oracle_certs = 0;
  auto certificate = [&](const Graph& g, int k) -> std::optional<Colouring> {
    if (assignment_count(k, g.order(), default_oracle_budget)) {
      ++oracle_certs;
      return brute_force(g, k, Mode::J);
    }
    auto cert = j_number(g, Mode::J).certificate;
    if (cert && !is_j_feasible(g, *cert)) return std::nullopt;
    return cert;
  };

  for (int n = 3; n <= 18; n += 3) {
    const FamilySpec spec = family::Cycle{n};
    const auto g = generate_family(spec);
    const auto name = to_string(spec);
    const Rational closed_mean = q(1 + 2 + 3, 3);
    const Rational closed_var = q(1 + 4 + 9, 3) - closed_mean * closed_mean;
    c.expect(closed_mean == q(2) && closed_var == q(2, 3), name + " closed form");
    const auto cert = certificate(g, 3);
    c.expect(cert.has_value(), name + " has no verified certificate");
    if (cert) {
      const auto d = colour_distribution(g, *cert);
      c.expect(j_mean(d) == closed_mean, name + " certificate mean " + to_string(j_mean(d)));
      c.expect(j_variance(d) == closed_var, name + " certificate variance " + to_string(j_variance(d)));
    }
    const auto p = predict(spec);
    c.expect(p.mean == q(2) && p.variance == q(2, 3), name + " predicted statistics");
    c.expect(p.mean_provenance && !p.mean_provenance->paper_consistent && p.mean_provenance->paper_value == q(1, 2),
             name + " mean not tagged paper-discrepant (1/2)");
    c.expect(p.variance_provenance && !p.variance_provenance->paper_consistent &&
                 p.variance_provenance->paper_value == q(53, 12),
             name + " variance not tagged paper-discrepant (53/12)");
  }

  for (std::int64_t n : {4, 8, 10, 14, 16}) {
    const FamilySpec spec = family::Wheel{static_cast<int>(n)};
    const auto g = generate_family(spec);
    const auto name = to_string(spec);
    const Rational closed = q(n * n + 10 * n, 4 * (n + 1) * (n + 1));
    const auto cert = certificate(g, 3);
    c.expect(cert.has_value(), name + " has no verified certificate");
    if (cert) {
      const auto d = colour_distribution(g, *cert);
      c.expect(j_variance(d) == closed, name + " certificate variance " + to_string(j_variance(d)));
    }
    const auto p = predict(spec);
    c.expect(p.variance == closed, name + " predicted variance");
    c.expect(p.variance_provenance && !p.variance_provenance->paper_consistent &&
                 p.variance_provenance->paper_value == q(10 * n * n + 43 * n + 30, 4 * (n + 1) * (n + 1)),
             name + " variance not tagged paper-discrepant");
  }
  note = std::to_string(oracle_certs) + " certificates from exhaustive search";
}

void a8(Check& c, std::string& note) {
  const auto start = Clock::now();
  const Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                    {0, 5}, {1, 4}, {2, 7}, {3, 6}});
  const Colouring printed(4, {1, 2, 4, 1, 3, 4, 2, 3});
  c.expect(is_j_feasible(g, printed), "printed colouring is not J-feasible");
  const auto o = j_number(g, Mode::J);
  c.expect(o.k == 4 && o.delta_plus_one == 4, "solver J = " + show(o.k));
  const auto oracle = brute_force_maximum(g, Mode::J);
  c.expect(oracle.k == 4, "oracle J = " + show(oracle.k));
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s >= 1 s");
  note = std::to_string(secs) + " s";
}

void a9(Check& c, std::string&) {
  for (const auto& [name, g] : a1_corpus()) {
    const auto j = j_number(g, Mode::J);
    const auto js = j_number(g, Mode::JStar);
    if (j.k) {
      c.expect(*j.k <= min_degree(g) + 1, name + ": J > delta+1");
      c.expect(is_j_feasible(g, *j.certificate) && j.certificate->palette_size() == *j.k,
               name + ": J certificate fails");
      if (has_pendant(g)) c.expect(*j.k <= 2, name + ": pendant vertex but J > 2");
      c.expect(js.k && *j.k <= *js.k, name + ": J > J*");
    }
    if (js.k)
      c.expect(is_j_star_feasible(g, *js.certificate) && js.certificate->palette_size() == *js.k,
               name + ": J* certificate fails");
    for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Dimacs})
      c.expect(parse_graph(serialize_graph(g, fmt), fmt) == g,
               name + ": " + std::string(format_name(fmt)) + " round trip");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"A1", "solver matches exhaustive oracle on small families and 300 random graphs", a1},
      {"A2", "cycles 3..18: colourable iff 2|n or 3|n, J = 3 if 3|n else 2", a2},
      {"A3", "J(K_n) = n and J(K_{n1..nl}) = l up to 8 vertices (solver and oracle)", a3},
      {"A4", "wheels: J = 4 / 3 / not colourable", a4},
      {"A5", "paths 3..12: J = 2, J* = 3", a5},
      {"A6", "statistics matching the printed formulas", a6},
      {"A7", "recomputed statistics where the printed formulas disagree", a7},
      {"A8", "figure 1 graph: J = 4 = delta+1", a8},
      {"A9", "invariants and round trips over the A1 corpus", a9},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    std::string note;
    try {
      cr.body(check, note);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS " : "FAIL ") << cr.id << "  " << cr.title << "  (" << check.count()
              << " checks" << (note.empty() ? "" : ", " + note) << ")\n";
    for (const auto& f : check.failures()) std::cout << "       " << f << '\n';
    failed += !check.ok();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
