// Copyright 2026 The Courant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "courant/errors.hpp"
#include "model.hpp"

using namespace courant;
using namespace courant::cli;

namespace {

std::string fixture_path(const std::string& name) { return std::string(COURANT_FIXTURE_DIR) + "/" + name; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

CommandResult run(const std::string& fixture, CommandOptions o) {
  o.model_path = fixture_path(fixture);
  return run_file(o, o.command);
}

CommandOptions options(const std::string& command) {
  CommandOptions o;
  o.command = command;
  return o;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const char* minimal = R"([base]
dim = 2

[algebroid.T]
kind = "tangent"
)";

}  // namespace

TEST_CASE("minimal model") {
  const ModelDocument doc = parse_model(minimal);
  CHECK(doc.base.dim == 2);
  CHECK(doc.base.coordinates == std::vector<std::string>{"x1", "x2"});
  REQUIRE(doc.algebroids.size() == 1);
  CHECK(doc.algebroids[0].kind == "tangent");
  CHECK(doc.algebroids[0].rank == 2);
  Model model(doc);
  CHECK(model.algebroid("T").rank() == 2);
}

TEST_CASE("bracket tables") {
  const std::string text = std::string(minimal) + R"(
[algebroid.g]
rank = 2

[algebroid.g.anchor]
"1" = ["1", "0"]

[algebroid.g.brackets]
"1,2" = ["0", "x2^2"]
)";
  const ModelDocument doc = parse_model(text);
  const AlgebroidDecl* g = doc.algebroid("g");
  REQUIRE(g != nullptr);
  REQUIRE(g->brackets.count({0, 1}) == 1);
  const Scalar x2 = Scalar::coordinate(1);
  CHECK(g->brackets.at({0, 1}) == RFVector{RationalFunction(0), RationalFunction(x2 * x2)});

  SUBCASE("named coordinate") {
    const ModelDocument named = parse_model(R"([base]
dim = 1
coordinates = ["x"]

[algebroid.g]
rank = 2

[algebroid.g.brackets]
"1,2" = ["0","x^2"]
)");
    Model model(named);
    const Scalar x = Scalar::coordinate(0);
    CHECK(model.algebroid("g").structure(0, 1) == RFVector{RationalFunction(0), RationalFunction(x * x)});
  }
  SUBCASE("a swapped key is negated") {
    const std::string swapped = std::string(minimal) + R"(
[algebroid.g]
rank = 2

[algebroid.g.brackets]
"2,1" = ["0", "x2^2"]
)";
    const ModelDocument swapped_doc = parse_model(swapped);
    const AlgebroidDecl* h = swapped_doc.algebroid("g");
    CHECK(h->brackets.at({0, 1}) == RFVector{RationalFunction(0), RationalFunction(-(x2 * x2))});
  }
}

TEST_CASE("syntax errors carry positions") {
  const std::string undeclared = R"([base]
dim = 2

[algebroid.T]
kind = "tangent"

[bivector.p]
host = "T"
"1,2" = "z + 1"
)";
  try {
    parse_model(undeclared);
    FAIL("expected a SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 9);
    CHECK(e.column() == 10);
    CHECK(contains(e.what(), "undeclared name 'z'"));
  }
  CHECK_THROWS_AS(parse_model("[base]\ndim = \"two\"\n"), SyntaxError);
  CHECK_THROWS_AS(parse_model("[base]\ndim = 2\n[algebroid.T]\nkind = \"tangent\"\nkind = \n"), SyntaxError);
  CHECK_THROWS_AS(parse_model("[base\ndim = 2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_model("[base]\ndim = 2\ncoordinates = [\"x\"]\n"), Error);
  CHECK_THROWS_AS(parse_model(std::string(minimal) + "[algebroid.T]\nkind = \"tangent\"\n"), Error);
  CHECK_THROWS_AS(parse_model(std::string(minimal) + "[bivector.p]\nhost = \"T\"\n\"1,1\" = \"1\"\n"), SyntaxError);
  CHECK_THROWS_AS(parse_model(std::string(minimal) + "[bivector.p]\nhost = \"T\"\n\"1,3\" = \"1\"\n"), Error);
}

TEST_CASE("resolution and shape errors") {
  CHECK_THROWS_AS(parse_model(std::string(minimal) + "[double.D]\nA = \"T\"\nAstar = \"missing\"\n"), ResolutionError);
  CHECK_THROWS_AS(parse_model(std::string(minimal) + "[algebroid.p]\npoint = true\nrank = 2\n[double.D]\nA = \"T\"\nAstar = \"p\"\n"),
                  Error);
  CHECK_THROWS_AS(parse_model(std::string(minimal) + "[algebroid.C]\nkind = \"cotangent\"\n"), Error);
}

TEST_CASE("printing round-trips every fixture") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(COURANT_FIXTURE_DIR)) {
    if (entry.path().extension() != ".model") continue;
    CAPTURE(entry.path().string());
    const ModelDocument doc = parse_model(read(entry.path().string()));
    const std::string printed = print_model(doc);
    const ModelDocument again = parse_model(printed);
    CHECK(again == doc);
    CHECK(print_model(again) == printed);
    ++count;
  }
  CHECK(count >= 5);
}

TEST_CASE("courant-check on the linear Poisson double") {
  CommandOptions o = options("courant-check");
  o.double_name = "std";
  const CommandResult r = run("r3_linear.model", o);
  CHECK(r.exit_code == 0);
  for (const char* id : {"i", "ii", "iii", "iv", "v"}) {
    CHECK(contains(r.output, std::string("  clause ") + id + ": pass\n"));
  }
  CHECK(contains(r.output, "status: pass\n"));
}

TEST_CASE("compose") {
  CommandOptions o = options("compose");
  o.u = "U";
  o.v = "V";
  SUBCASE("plus") {
    o.plus = true;
    const CommandResult r = run("r4_compose.model", o);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "W[1,2]: x1/(x1 + 1)\n"));
    CHECK(contains(r.output, "W[3,4]: x3/(x3 + 1)\n"));
    CHECK(contains(r.output, "clause jacobi: pass"));
    CHECK(contains(r.output, "clause inverse-sum: pass"));
  }
  SUBCASE("minus") {
    o.minus = true;
    const CommandResult r = run("r4_compose.model", o);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "induced[1,2]: 2*x1/(x1 - 1)\n"));
    CHECK(contains(r.output, "report bialgebroid (T*U, T*V): pass"));
  }
  SUBCASE("neither flag") { CHECK(run("r4_compose.model", o).exit_code == 2); }
}

TEST_CASE("anomaly separates the residual from compatibility") {
  CommandOptions o = options("anomaly");
  o.double_name = "so3";
  const CommandResult r = run("point_pairs.model", o);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "triples: 56\n"));
  CHECK(contains(r.output, "clause residual: pass"));
  CHECK(contains(r.output, "clause compatibility: fail"));
  o.triples = "strict";
  CHECK(contains(run("point_pairs.model", o).output, "triples: 20\n"));
  o.triples = "some";
  CHECK(run("point_pairs.model", o).exit_code == 2);
}

TEST_CASE("dirac-check and mc-residual") {
  CommandOptions o = options("dirac-check");
  o.subbundle = "twisted";
  CHECK(run("r2_sections.model", o).exit_code == 0);
  o.subbundle = "sym";
  const CommandResult sym = run("r2_sections.model", o);
  CHECK(sym.exit_code == 1);
  CHECK(contains(sym.output, "clause isotropy: fail"));

  CommandOptions m = options("mc-residual");
  m.double_name = "canonical";
  m.graph_of = "pi";
  CHECK(run("r3_linear.model", m).exit_code == 0);
  m.graph_of = "Hbad";
  const CommandResult bad = run("r3_linear.model", m);
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "residual: e1^e2^e3\n"));
  CHECK(contains(bad.output, "clause oracle-agreement: pass"));
  m.graph_of.clear();
  m.samples = 6;
  const CommandResult suite = run("r3_linear.model", m);
  CHECK(suite.exit_code == 0);
  CHECK(contains(suite.output, "clause agreement-H: pass"));
}

TEST_CASE("hamiltonian, null-dirac, reduce-check, dual-pair, morphism-check") {
  CommandOptions h = options("hamiltonian");
  h.double_name = "canonical";
  h.graph_of = "pi";
  h.strong = true;
  const CommandResult ham = run("r3_linear.model", h);
  CHECK(ham.exit_code == 0);
  CHECK(contains(ham.output, "induced.bracket[1,2]: [0, 0, 1]\n"));

  CommandOptions n = options("null-dirac");
  n.double_name = "sympl";
  n.h = {"d1", "d3"};
  const CommandResult nd = run("r4_compose.model", n);
  CHECK(nd.exit_code == 1);
  CHECK(contains(nd.output, "h-perp[2]: -x1*eps3 + eps4\n"));

  CommandOptions rc = options("reduce-check");
  rc.pi = "symplectic";
  rc.h = {"d1", "d3"};
  CHECK(run("r4_compose.model", rc).exit_code == 1);

  CommandOptions d = options("dual-pair");
  d.pi = "symplectic";
  d.h = {"d1"};
  const CommandResult dp = run("r4_compose.model", d);
  CHECK(dp.exit_code == 0);
  CHECK(contains(dp.output, "D-bar[2]: e3\n"));
  d.h = {"d1", "d3"};
  CHECK(contains(run("r4_compose.model", d).output, "error: NotNullDirac"));

  CommandOptions mc = options("morphism-check");
  mc.morphism = "identity";
  CHECK(run("morphism.model", mc).exit_code == 0);
  mc.morphism = "into_aff";
  CHECK(run("morphism.model", mc).exit_code == 1);
}

TEST_CASE("input errors exit with 2") {
  CommandOptions o = options("courant-check");
  CHECK(run("r3_linear.model", o).exit_code == 2);
  o.double_name = "nope";
  const CommandResult r = run("r3_linear.model", o);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "error: ResolutionError"));
  CHECK(run("does-not-exist.model", options("validate")).exit_code == 2);
  const CommandResult syntax = run_text("[base]\ndim = 1\nx = \n", options("validate"), "validate");
  CHECK(syntax.exit_code == 2);
  CHECK(contains(syntax.output, "error: SyntaxError: 3:"));
}

TEST_CASE("reports are deterministic") {
  for (bool porcelain : {false, true}) {
    CommandOptions o = options("anomaly");
    o.double_name = "so3";
    o.porcelain = porcelain;
    CHECK(run("point_pairs.model", o).output == run("point_pairs.model", o).output);
    CommandOptions m = options("mc-residual");
    m.double_name = "canonical";
    m.samples = 4;
    m.seed = 7;
    m.porcelain = porcelain;
    CHECK(run("r3_linear.model", m).output == run("r3_linear.model", m).output);
  }
}

TEST_CASE("porcelain output is JSON with the text report's content") {
  CommandOptions o = options("courant-check");
  o.double_name = "std";
  o.porcelain = true;
  const CommandResult r = run("r3_linear.model", o);
  CHECK(r.exit_code == 0);
  CHECK(r.output.front() == '{');
  CHECK(contains(r.output, "\"status\": \"pass\""));
  CHECK(contains(r.output, "\"exit\": 0"));
}
