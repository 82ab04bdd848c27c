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

#include "courant/errors.hpp"
#include "courant/expression.hpp"
#include "generators.hpp"

using namespace courant;
using namespace courant::testing;

namespace {

const SymbolScope scope{{"x", "y"}, {"lambda"}, {"f"}};
const NameContext names = scope.names();

RationalFunction parse(const std::string& text) { return parse_expression(text, scope); }

Scalar X() { return Scalar::coordinate(0); }
Scalar Y() { return Scalar::coordinate(1); }

void expect_error(const std::string& text, int column, const std::string& fragment) {
  CAPTURE(text);
  try {
    parse_expression(text, scope, 3, 5);
    FAIL("expected a SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5 + column - 1);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("literals and names") {
  CHECK(parse("0") == RationalFunction(0));
  CHECK(parse("42") == RationalFunction(42));
  CHECK(parse("1/3") == RationalFunction(Rational(1, 3)));
  CHECK(parse("x") == RationalFunction(X()));
  CHECK(parse("  y ") == RationalFunction(Y()));
  CHECK(parse("lambda") == RationalFunction(Scalar::parameter("lambda")));
  CHECK(parse("f") == RationalFunction(Scalar::function("f")));
  CHECK(parse("f_{x,y}") == RationalFunction(Scalar::function("f").differentiate(0).differentiate(1)));
  CHECK(parse("f_{y,x}") == parse("f_{x,y}"));
}

TEST_CASE("precedence") {
  CHECK(parse("2*3^2") == RationalFunction(18));
  CHECK(parse("-2^2") == RationalFunction(-4));
  CHECK(parse("(-2)^2") == RationalFunction(4));
  CHECK(parse("1 - 2 - 3") == RationalFunction(-4));
  CHECK(parse("12/2/3") == RationalFunction(2));
  CHECK(parse("2 + 3*4") == RationalFunction(14));
  CHECK(parse("(2 + 3)*4") == RationalFunction(20));
  CHECK(parse("-x*y") == RationalFunction(-(X() * Y())));
  CHECK(parse("x^0") == RationalFunction(1));
  CHECK(parse("x^2*y - y^2*x") == RationalFunction(X() * X() * Y() - Y() * Y() * X()));
  CHECK(parse("--x") == RationalFunction(X()));
}

TEST_CASE("quotients are reduced") {
  CHECK(parse("(x^2 - 1)/(x - 1)") == RationalFunction(X() + Scalar(1)));
  CHECK(parse("x/(x + 1)") == RationalFunction(X(), X() + Scalar(1)));
  CHECK(parse("x/(x + 1)").to_string(names) == "x/(x + 1)");
  CHECK(parse("2*x/(x - 1)").to_string(names) == "2*x/(x - 1)");
}

TEST_CASE("errors report the offending column") {
  expect_error("x +", 4, "expected");
  expect_error("(x + 1", 7, "expected");
  expect_error("x + q", 5, "undeclared name 'q'");
  expect_error("x ^ y", 5, "expected");
  expect_error("x ^ -1", 5, "expected");
  expect_error("x $ 1", 3, "");
  expect_error("x/(x - x)", 3, "");
  expect_error("g_{x}", 1, "");
  expect_error("f_{z}", 1, "");
  expect_error("", 1, "expected");
  CHECK_THROWS_AS(parse_polynomial("1/x", scope), SyntaxError);
  CHECK(parse_polynomial("x/2", scope) == X().scaled(Rational(1, 2)));
}

TEST_CASE("printing round-trips (property)") {
  Rng rng(20261015);
  ScalarShape shape;
  shape.max_degree = 3;
  shape.functions = {"f"};
  shape.parameters = {"lambda"};
  for (int k = 0; k < 300; ++k) {
    const Scalar n = random_scalar(rng, shape);
    Scalar d = random_scalar(rng, shape);
    if (d.is_zero()) d = Scalar(1);
    const RationalFunction value(n, d);
    CAPTURE(value.to_string(names));
    CHECK(parse(value.to_string(names)) == value);
  }
}

TEST_CASE("parsing agrees with arithmetic (property)") {
  // Builds random expression text and the matching value side by side.
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    std::string text = "1";
    RationalFunction value(1);
    for (int step = 0; step < 4; ++step) {
      const long c = uniform(rng, 1, 4);
      const long e = uniform(rng, 0, 3);
      Scalar atom(1);
      for (long i = 0; i < e; ++i) atom *= X() + Scalar(c);
      const std::string atom_text = "(x + " + std::to_string(c) + ")^" + std::to_string(e);
      switch (uniform(rng, 0, 3)) {
        case 0:
          text = "(" + text + ") + " + atom_text;
          value += RationalFunction(atom);
          break;
        case 1:
          text = "(" + text + ") - " + atom_text;
          value -= RationalFunction(atom);
          break;
        case 2:
          text = "(" + text + ")*" + atom_text;
          value *= RationalFunction(atom);
          break;
        default:
          text = "(" + text + ")/" + atom_text;
          value /= RationalFunction(atom);
          break;
      }
    }
    CAPTURE(text);
    CHECK(parse(text) == value);
  }
}
