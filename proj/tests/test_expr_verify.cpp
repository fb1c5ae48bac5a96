#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mdimlab/constructors.hpp"
#include "mdimlab/error.hpp"
#include "mdimlab/expr.hpp"
#include "mdimlab/verify.hpp"

using namespace mdimlab;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::BadParameters;
}

}  // namespace

TEST_CASE("graph expressions") {
  CHECK(parse_graph("cycle:5") == cycle(5));
  CHECK(parse_graph("petersen") == odd_graph(3));
  CHECK(parse_graph("double(complete:4)") == complete_bipartite_minus_matching(4));
  CHECK(parse_graph("fold(hypercube:3)") == complete(4));
  CHECK(parse_graph("halfplus(hypercube:3)") == complete(4));
  CHECK(parse_graph("taylor(cycle:5)") == parse_graph("icosahedron"));
  CHECK(parse_graph("incidence(design(double(rook:4:4)))").order() == 32);
  CHECK(parse_cover("taylor(paley:13)").tags.size() == 28);
}

TEST_CASE("design expressions") {
  CHECK(parse_design("pg2:2") == pg2(2));
  CHECK(parse_design("complement(complement(pg2:3))") == pg2(3));
  CHECK(parse_design("dual(pg2:2)").v() == 7);
}

TEST_CASE("expression errors") {
  for (const char* bad : {"", "cycle", "cycle:x", "cycle:5)", "nosuch:3", "double(cycle:5", "frobnicate(cycle:5)", "rook:4"})
    CHECK(code_of([&] { parse_graph(bad); }) == Errc::ParseError);
  CHECK(code_of([] { parse_cover("cycle:5"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_graph("paley:7"); }) == Errc::BadParameters);
}

TEST_CASE("file expressions") {
  const auto path = std::filesystem::temp_directory_path() / "mdimlab_expr_test.g";
  save_graph(path.string(), odd_graph(3));
  CHECK(parse_graph("double(file:" + path.string() + ")") == bipartite_double(odd_graph(3)).graph);
  std::filesystem::remove(path);
}

TEST_CASE("evaluate") {
  CHECK(evaluate("mu/cycle:7") == "2");
  CHECK(evaluate("ah/hypercube:3") == "\"AH5\"");
  CHECK(evaluate("folded-lift/multipartite:3:4") == R"({"case":"with-extra","size":9})");
  CHECK(evaluate("blocking/pg2:3") == R"({"size":9,"double_blocking":true,"minus_one_semi_resolving":true})");
  CHECK(code_of([] { evaluate("nosuch/cycle:5"); }) == Errc::ParseError);
  CHECK(code_of([] { evaluate("cycle:5"); }) == Errc::ParseError);
  SolveOptions tiny;
  tiny.node_budget = 1;
  CHECK(code_of([&] { evaluate("mu/gq22", tiny); }) == Errc::BudgetExceeded);
}

TEST_CASE("oracle values agree with the solver on small ids") {
  for (const char* id : {"mu/petersen", "projection/double(petersen)", "descendants/cycle:5", "split/pg2:2", "taylor-lift/cycle:5"}) {
    CAPTURE(id);
    CHECK(oracle_value(id, 40) == evaluate(id));
  }
  CHECK(oracle_value("mu/hypercube:6", 20).empty());
  CHECK(oracle_value("ah/petersen", 20).empty());
}

TEST_CASE("golden file round trip and tampering") {
  const std::vector<GoldenEntry> golden = load_golden(default_golden_path());
  REQUIRE(!golden.empty());
  const auto path = std::filesystem::temp_directory_path() / "mdimlab_golden_test.json";
  std::vector<GoldenEntry> small;
  for (const GoldenEntry& e : golden)
    if (e.id == "mu/cycle:5" || e.id == "mu/petersen") small.push_back(e);
  REQUIRE(small.size() == 2);
  save_golden(path.string(), small);
  CHECK(load_golden(path.string()).size() == 2);

  SuiteOptions o;
  o.golden_path = path.string();
  for (const CheckRow& r : run_suite(o)) CHECK(r.pass);

  small[0].expected = "7";
  save_golden(path.string(), small);
  const auto rows = run_suite(o);
  CHECK(!rows[0].pass);
  CHECK(rows[0].computed == "2");
  std::filesystem::remove(path);

  CHECK(code_of([] { load_golden("/nonexistent/golden.json"); }) == Errc::ParseError);
}

TEST_CASE("slow entries run only on request") {
  const auto path = std::filesystem::temp_directory_path() / "mdimlab_golden_slow.json";
  save_golden(path.string(), {{"mu/cycle:6", "", "2", "published", true}});
  SuiteOptions o;
  o.golden_path = path.string();
  CHECK(run_suite(o).empty());
  o.include_slow = true;
  CHECK(run_suite(o).size() == 1);
  std::filesystem::remove(path);
}
