#include <jrainbow/cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

namespace {

using namespace jrainbow;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(JRAINBOW_DATA_DIR) + "/" + name; }

TEST(Cli, TableCycleMatchesParityRule) {
  auto r = run({"table", "cycle", "3..12", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = r.json().at("rows");
  ASSERT_EQ(rows.size(), 10u);
  for (const auto& row : rows) {
    const int n = row.at("n");
    const bool colourable = n % 2 == 0 || n % 3 == 0;
    EXPECT_EQ(row.at("colourable").get<bool>(), colourable) << n;
    if (colourable) EXPECT_EQ(row.at("j").get<int>(), n % 3 == 0 ? 3 : 2) << n;
    else EXPECT_TRUE(row.at("j").is_null());
    EXPECT_TRUE(row.at("agrees").get<bool>());
  }
}

TEST(Cli, TableText) {
  auto r = run({"table", "path", "3..5", "--mode", "Jstar"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agrees"), std::string::npos);
  EXPECT_EQ(r.out.find("NO"), std::string::npos);
}

TEST(Cli, PredictWheel) {
  auto r = run({"predict", "wheel", "9", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_EQ(j.at("j_number").get<int>(), 4);
  EXPECT_EQ(j.at("provenance").at("mean").at("tag"), "paper-consistent");
}

TEST(Cli, PredictCycleFlagsDiscrepancy) {
  auto r = run({"predict", "cycle", "12", "--json"});
  const auto j = r.json();
  EXPECT_EQ(j.at("distribution").at("mean"), Json::parse("[2,1]"));
  EXPECT_EQ(j.at("distribution").at("variance"), Json::parse("[2,3]"));
  EXPECT_EQ(j.at("provenance").at("variance").at("tag"), "paper-discrepant");
  EXPECT_EQ(j.at("provenance").at("variance").at("paper_value"), Json::parse("[53,12]"));
  auto text = run({"predict", "cycle", "12"});
  EXPECT_NE(text.out.find("paper-discrepant"), std::string::npos);
}

TEST(Cli, VerifyFigure1) {
  EXPECT_EQ(run({"verify", "--mode", "J", data("fig1.edges"), data("fig1.colors")}).code, 0);
  auto r = run({"verify", data("fig1.edges"), data("fig1.colors"), "--json"});
  EXPECT_TRUE(r.json().at("feasible").get<bool>());
  EXPECT_EQ(r.json().at("rainbow_vertices").size(), 8u);
}

TEST(Cli, VerifyRejectsInfeasible) {
  // The mod-3 pattern on a path leaves the endpoints short of colours.
  auto tmp = ::testing::TempDir() + "p4.colors";
  std::ofstream(tmp) << "1\n2\n3\n1\n";
  EXPECT_EQ(run({"verify", "family:path:4", tmp}).code, cli::not_colourable);
  EXPECT_EQ(run({"verify", "--mode", "Jstar", "family:path:4", tmp}).code, 0);
}

TEST(Cli, VerifyAcceptsJsonColouring) {
  auto tmp = ::testing::TempDir() + "c6.json";
  std::ofstream(tmp) << R"({"k": 3, "colors": [1,2,3,1,2,3]})";
  EXPECT_EQ(run({"verify", "family:cycle:6", tmp}).code, 0);
}

TEST(Cli, VerifyLengthMismatchIsValidationError) {
  EXPECT_EQ(run({"verify", data("c9.edges"), data("c10.colors")}).code, cli::invalid_input);
}

TEST(Cli, SolveJsonSchema) {
  auto r = run({"solve", data("fig2b.col"), "--json", "--per-k"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j.at("mode"), "J");
  EXPECT_EQ(j.at("status"), "colourable");
  EXPECT_EQ(j.at("k").get<int>(), 4);
  EXPECT_EQ(j.at("certificate").size(), 8u);
  EXPECT_EQ(j.at("delta_plus_one").get<int>(), 5);
  EXPECT_EQ(j.at("per_k").size(), 5u);
  EXPECT_FALSE(j.at("per_k").at(4).at("feasible").get<bool>());

  // The certificate round-trips through the colouring schema and verifies.
  const auto c = colouring_from_json(Json{{"k", j.at("k")}, {"colors", j.at("certificate")}});
  EXPECT_TRUE(is_j_feasible(parse_graph(cli::detail::read_source(data("fig2b.col")), GraphFormat::Dimacs), c));
}

TEST(Cli, SolveStrictNotColourable) {
  auto r = run({"solve", "family:cycle:7", "--strict", "--canonical"});
  EXPECT_EQ(r.code, cli::not_colourable);
  EXPECT_NE(r.out.find("not_colourable"), std::string::npos);
  EXPECT_EQ(run({"solve", "family:cycle:7"}).code, 0);
}

TEST(Cli, SolveDisconnectedIsValidationError) {
  auto tmp = ::testing::TempDir() + "two_edges.edges";
  std::ofstream(tmp) << "4 2\n0 1\n2 3\n";
  auto r = run({"solve", tmp});
  EXPECT_EQ(r.code, cli::invalid_input);
  EXPECT_NE(r.err.find("not connected"), std::string::npos);
}

TEST(Cli, StatsOddPath) {
  auto tmp = ::testing::TempDir() + "p5.colors";
  std::ofstream(tmp) << "1\n2\n1\n2\n1\n";
  auto r = run({"stats", "family:path:5", tmp, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json(), Json::parse(R"({"theta":[3,2],"pmf":[[3,5],[2,5]],"mean":[7,5],"variance":[6,25]})"));
}

TEST(Cli, OracleMatchAndBudget) {
  auto r = run({"oracle", data("c9.edges"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.json().at("match").get<bool>());
  EXPECT_EQ(r.json().at("oracle").at("per_k"), Json::parse(R"([{"k":1,"feasible":false},{"k":2,"feasible":false},{"k":3,"feasible":true}])"));

  EXPECT_EQ(run({"oracle", data("c9.edges"), "--budget", "100"}).code, cli::budget_exceeded);

  ::setenv("JRAINBOW_BUDGET", "100", 1);
  EXPECT_EQ(run({"oracle", data("c9.edges")}).code, cli::budget_exceeded);
  EXPECT_EQ(run({"oracle", data("c9.edges"), "--budget", "100000"}).code, 0);
  ::unsetenv("JRAINBOW_BUDGET");
}

TEST(Cli, FamilyOutputParsesBack) {
  auto r = run({"family", "multipartite", "2,2,2", "--format", "dimacs"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph(r.out, GraphFormat::Dimacs).size(), 12u);
  auto j = run({"family", "wheel", "5", "--json"}).json();
  EXPECT_EQ(j.at("n").get<int>(), 6);
  EXPECT_EQ(j.at("edges").size(), 10u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::invalid_input);
  EXPECT_EQ(run({"frobnicate"}).code, cli::invalid_input);
  EXPECT_EQ(run({"solve", "family:cycle:6", "--mode", "K"}).code, cli::invalid_input);
  EXPECT_EQ(run({"predict", "cycle", "2"}).code, cli::invalid_input);
  EXPECT_EQ(run({"solve", "/nonexistent/graph.edges"}).code, cli::invalid_input);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ParseErrorsCarryLineNumbers) {
  auto tmp = ::testing::TempDir() + "bad.edges";
  std::ofstream(tmp) << "3 2\n0 1\n1 two\n";
  auto r = run({"solve", tmp});
  EXPECT_EQ(r.code, cli::invalid_input);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

}  // namespace
