#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "holoconn/errors.hpp"
#include "holoconn/parser.hpp"
#include "holoconn/report.hpp"

using namespace holoconn;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing file " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ProcResult {
  int exit_code;
  std::string out;
};

ProcResult run_cli(const std::string& args) {
  std::string cmd = std::string(HOLOCONN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  return ProcResult{WEXITSTATUS(rc), out};
}

std::string golden(const std::string& name) {
  return std::string(HOLOCONN_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parse: inline entries make a valid request") {
  auto reqs = parse_connection_file(
      "vars = z, xi\nGamma1_11 = \"1\"\nGamma1_12 = \"xi\"; Gamma1_21 = \"xi\"\n");
  REQUIRE(reqs.size() == 1);
  CHECK(reqs[0].source_kind == "inline");
  CHECK((reqs[0].connection.gamma(1, 1, 1) - Expr(1)).is_zero());
  CHECK((reqs[0].connection.gamma(1, 1, 2) - Expr::variable(2)).is_zero());
  CHECK(reqs[0].connection.gamma(2, 2, 2).is_zero());  // unset entries are 0
  // default analyses: everything that needs no base point
  CHECK(reqs[0].analyses.count(Analysis::Flat) == 1);
  CHECK(reqs[0].analyses.count(Analysis::Killing) == 0);
}

TEST_CASE("parse: family dispatch") {
  auto reqs = parse_connection_file(
      "family = elliptic; f12 = \"xi\"; g22 = \"0\"; g12 = \"0\"\n");
  REQUIRE(reqs.size() == 1);
  CHECK(reqs[0].source_kind == "elliptic");
  CHECK((reqs[0].connection.gamma(1, 1, 2) - Expr::variable(2)).is_zero());
  CHECK((reqs[0].connection.gamma(1, 1, 1) - Expr(1)).is_zero());
}

TEST_CASE("parse: negative exponent is a syntax error with position") {
  try {
    parse_connection_file("family = elliptic; f12 = \"xi ^ -1\"; g22 = \"0\"; g12 = \"0\"\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 20);
  }
}

TEST_CASE("parse: validation failures") {
  CHECK_THROWS_AS(parse_connection_file("family = elliptic; f12 = \"xi\"\n"),
                  ArityError);  // missing g22/g12
  CHECK_THROWS_AS(parse_connection_file("nonsense = \"1\"\n"), SyntaxError);
  CHECK_THROWS_AS(parse_connection_file("analyses = torsion\nanalyses = flat\n"),
                  SyntaxError);  // duplicate key
  CHECK_THROWS_AS(parse_connection_file("analyses = killing\n"),
                  ArityError);  // no base point
  CHECK_THROWS_AS(parse_connection_file("analyses = killing\npoint = 0, 0\norder = 1\n"),
                  ArityError);  // order < 2
  CHECK_THROWS_AS(parse_connection_file("Gamma1_11 = \"w\"\n"), UnknownVariable);
  CHECK_THROWS_AS(
      parse_connection_file("family = translation; Gamma1_11 = \"xi\"\n"),
      ArityError);  // non-constant translation entry
  CHECK_THROWS_AS(parse_connection_file("vars = z\n"), SyntaxError);
}

TEST_CASE("run: elliptic flat/projective verdicts") {
  auto reqs = parse_connection_file(
      "family = elliptic; f12 = \"xi\"; g22 = \"0\"; g12 = \"0\"\n"
      "analyses = flat, projective\n");
  Report rep = run(reqs.at(0));
  REQUIRE(rep.flat.has_value());
  CHECK_FALSE(*rep.flat);
  REQUIRE(rep.projectively_flat.has_value());
  CHECK(*rep.projectively_flat);
  CHECK(rep.liouville->l1.is_zero());
  CHECK(rep.liouville->l2.is_zero());
}

TEST_CASE("run: killing dimension tables") {
  auto reqs = parse_connection_file(
      "analyses = killing\npoint = 0, 0\norder = 6\nwindow = 3\n");
  Report rep = run(reqs.at(0));  // inline with no entries = standard connection
  REQUIRE(rep.killing.has_value());
  for (const auto& [order, dim] : rep.killing->dimensions) CHECK(dim == 6);
  CHECK(rep.killing->stabilized);

  auto ell = parse_connection_file(
      "family = elliptic; f12 = \"xi\"; g22 = \"0\"; g12 = \"0\"\n"
      "analyses = killing\npoint = 0, 0\norder = 8\nwindow = 3\n");
  Report rep2 = run(ell.at(0));
  CHECK(rep2.killing->dimension == 1);
  CHECK(rep2.killing->stabilized);
}

TEST_CASE("run: analysis errors carry the analysis name") {
  auto reqs = parse_connection_file(
      "Gamma1_11 = \"1/xi\"\nanalyses = killing\npoint = 0, 0\norder = 4\n");
  try {
    run(reqs.at(0));
    FAIL("expected AnalysisError");
  } catch (const AnalysisError& e) {
    CHECK(e.analysis == "killing");
  }
}

TEST_CASE("machine reports are deterministic and round-trip") {
  std::string text = slurp(golden("elliptic_basic.conn"));
  auto a = render_machine(run_batch(parse_connection_file(text)));
  auto b = render_machine(run_batch(parse_connection_file(text)));
  CHECK(a == b);

  auto parsed = nlohmann::ordered_json::parse(a);
  CHECK(parsed.dump(2) + "\n" == a);
}

TEST_CASE("report expressions re-parse to equal values") {
  auto reqs = parse_connection_file(
      "family = elliptic; f12 = \"xi\"; g22 = \"xi^2\"; g12 = \"0\"\n"
      "analyses = curvature, projective\n");
  Report rep = run(reqs.at(0));
  const Chart& chart = rep.request.chart;
  for (int l = 1; l <= 2; ++l)
    for (int k = 1; k <= 2; ++k) {
      const Expr& e = rep.curvature_tensor->entry(l, k);
      Expr back = parse_expression(e.to_string(chart), chart);
      CHECK(is_zero(back - e));
    }
  Expr back = parse_expression(rep.ode->k2.to_string(chart), chart);
  CHECK(is_zero(back - rep.ode->k2));
}

TEST_CASE("golden: machine output of the elliptic example") {
  auto r = run_cli("analyze " + golden("elliptic_basic.conn") + " --format machine");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("elliptic_basic.json")));
}

TEST_CASE("golden: killing table of the standard connection") {
  auto r = run_cli("analyze " + golden("killing_standard.conn"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("killing_standard.json")));
}

TEST_CASE("golden: batch file keeps input order") {
  auto r = run_cli("analyze " + golden("batch_mixed.conn") + " --format machine");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("batch_mixed.json")));
}

TEST_CASE("exit codes: 1 for parse errors, 2 for analysis errors") {
  CHECK(run_cli("analyze /nonexistent.conn").exit_code == 1);

  std::string bad = std::string(HOLOCONN_GOLDEN_DIR) + "/tmp_bad.conn";
  {
    std::ofstream out(bad);
    out << "Gamma1_11 = \"xi ^ -1\"\n";
  }
  CHECK(run_cli("analyze " + bad).exit_code == 1);
  std::remove(bad.c_str());

  std::string pole = std::string(HOLOCONN_GOLDEN_DIR) + "/tmp_pole.conn";
  {
    std::ofstream out(pole);
    out << "Gamma1_11 = \"1/xi\"\nanalyses = killing\npoint = 0, 0\norder = 4\n";
  }
  CHECK(run_cli("analyze " + pole).exit_code == 2);
  std::remove(pole.c_str());

  // precondition failure: flat analysis of a connection with torsion
  std::string tors = std::string(HOLOCONN_GOLDEN_DIR) + "/tmp_torsion.conn";
  {
    std::ofstream out(tors);
    out << "Gamma1_12 = \"1\"\nanalyses = flat\n";
  }
  CHECK(run_cli("analyze " + tors).exit_code == 2);
  std::remove(tors.c_str());
}

TEST_CASE("cli overrides reach every request") {
  auto r = run_cli("analyze " + golden("elliptic_basic.conn") +
                   " --report killing --point 0,0 --order 6 --window 3 "
                   "--format machine");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::ordered_json::parse(r.out);
  const auto& killing = parsed["reports"][0]["results"]["killing"];
  CHECK(killing["dimension"] == 1);
  CHECK(killing["stabilized"] == true);
  CHECK(parsed["reports"][0]["results"].contains("flat") == false);
}
