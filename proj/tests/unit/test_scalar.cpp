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
#include "courant/linear_algebra.hpp"
#include "courant/rational_function.hpp"
#include "generators.hpp"

using namespace courant;
using courant::testing::Rng;
using courant::testing::ScalarShape;
using courant::testing::random_scalar;
using courant::testing::x;

namespace {

bool divides(const Scalar& d, const Scalar& p) {
  try {
    (void)p.divide_exact(d);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("differentiate follows the polynomial, parameter and jet rules") {
  const Scalar X = x(0), Y = x(1);
  CHECK((X * Y * Y).differentiate(0) == Y * Y);

  const Scalar f = Scalar::function("f");
  const Scalar fx = f.differentiate(0);
  CHECK(fx != f);
  CHECK(fx.differentiate(1) == f.differentiate(1).differentiate(0));
  CHECK(fx.to_string({{"x", "y"}}) == "f_{x}");
  CHECK(fx.differentiate(1).to_string({{"x", "y"}}) == "f_{x,y}");

  const Scalar lambda = Scalar::parameter("lambda");
  CHECK((lambda * X).differentiate(0) == lambda);
  CHECK(lambda.differentiate(0).is_zero());
}

TEST_CASE("canonical form: merging, zero removal, order independence") {
  const Scalar X = x(0), Y = x(1);
  const Scalar a = X + Y + Scalar(3) - X;
  CHECK(a == Y + Scalar(3));
  CHECK(a.size() == 2);
  const Scalar b = Scalar::from_terms({{Monomial(Indeterminate::coordinate(1)), Rational(1)},
                                       {Monomial(), Rational(3)},
                                       {Monomial(Indeterminate::coordinate(0)), Rational(0)}});
  CHECK(b == a);
  CHECK(Scalar::from_terms(b.terms()) == b);
}

TEST_CASE("ring axioms on random scalars") {
  Rng rng(20261015);
  ScalarShape shape;
  shape.coordinates = 3;
  shape.functions = {"f"};
  shape.parameters = {"lambda"};
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(rng, shape);
    const Scalar b = random_scalar(rng, shape);
    const Scalar c = random_scalar(rng, shape);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    // Mixed partials commute, including on jets.
    CHECK(a.differentiate(0).differentiate(2) == a.differentiate(2).differentiate(0));
    // Product rule.
    CHECK((a * b).differentiate(1) == a.differentiate(1) * b + a * b.differentiate(1));
  }
}

TEST_CASE("gcd recovers a planted common factor") {
  Rng rng(7);
  ScalarShape shape;
  shape.coordinates = 3;
  shape.max_terms = 3;
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar g = random_scalar(rng, shape) + Scalar(1);
    const Scalar p = random_scalar(rng, shape) + x(0);
    const Scalar q = random_scalar(rng, shape) + x(1);
    const Scalar a = g * p;
    const Scalar b = g * q;
    const Scalar h = gcd(a, b);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(divides(h, a));
    CHECK(divides(h, b));
    CHECK(divides(g.monic(), h));
    CHECK(h.leading_coefficient() == Rational(1));
  }
  CHECK(gcd(Scalar(), Scalar()).is_zero());
  CHECK(gcd(x(0) * x(0) - 1, x(0) * x(0) + 2 * x(0) + 1) == x(0) + 1);
  CHECK(gcd(x(0) * x(1), x(1) * x(1) * x(2)) == x(1));
}

TEST_CASE("rational functions normalize to lowest terms with monic denominator") {
  const Scalar X = x(0), Y = x(1);
  const RationalFunction r((X * X - 1).scaled(2), (X + 1).scaled(4));
  CHECK(r.denominator() == Scalar(1));
  CHECK(r.numerator() == (X - 1).scaled(Rational(1, 2)));
  const RationalFunction s(Y, Scalar(-2) * X + 2);
  CHECK(s.denominator() == X - 1);
  CHECK(s.numerator() == Y.scaled(Rational(-1, 2)));
  CHECK(s + (-s) == RationalFunction());
  CHECK(s * s.inverse() == RationalFunction(1));
  // d/dx (1/(1+x)) = -1/(1+x)^2
  const RationalFunction inv(Scalar(1), X + 1);
  CHECK(inv.differentiate(0) == RationalFunction(Scalar(-1), (X + 1) * (X + 1)));
}

TEST_CASE("invert_matrix examples") {
  const Scalar X = x(0);
  CHECK(invert_matrix(Matrix<Scalar>{{1, 0}, {0, 1}}) == identity_matrix(2));

  // Cofactor expansion by hand: det = (1+x)^2, adj = [[0, -(1+x)], [1+x, 0]].
  const Matrix<Scalar> m{{0, 1 + X}, {-(1 + X), 0}};
  const RationalFunction u(Scalar(1), 1 + X);
  const RFMatrix expected{{0, -u}, {u, 0}};
  CHECK(invert_matrix(m) == expected);
  CHECK(invert_matrix(to_rational(m)) == expected);

  CHECK_THROWS_AS(invert_matrix(Matrix<Scalar>{{X, X}, {1, 1}}), SingularMatrix);
  CHECK(determinant(Matrix<Scalar>{{X, X}, {1, 1}}).is_zero());
}

TEST_CASE("invert_matrix on random nonsingular matrices") {
  Rng rng(50);
  ScalarShape shape;
  shape.coordinates = 3;
  shape.max_degree = 1;
  shape.max_terms = 3;
  int done = 0;
  while (done < 50) {
    const auto n = static_cast<std::size_t>(courant::testing::uniform(rng, 1, 4));
    Matrix<Scalar> m(n, Vector<Scalar>(n));
    for (auto& row : m) {
      for (auto& e : row) e = random_scalar(rng, shape);
    }
    if (determinant(m).is_zero()) {
      CHECK_THROWS_AS(invert_matrix(m), SingularMatrix);
      continue;
    }
    const RFMatrix inv = invert_matrix(m);
    CHECK(inv * to_rational(m) == identity_matrix(n));
    CHECK(to_rational(m) * inv == identity_matrix(n));
    // Cross-check against the rational-function determinant.
    CHECK(determinant(inv) * RationalFunction(determinant(m)) == RationalFunction(1));
    ++done;
  }
}

TEST_CASE("solve_in_span examples") {
  const Scalar X = x(0);
  const RFVector s1{1, 0, 0, 0}, s2{0, 1, X, 0};
  const auto c = solve_in_span(s1, {s1, s2});
  REQUIRE(c);
  CHECK(*c == RFVector{1, 0});

  RFVector v(4);
  for (std::size_t i = 0; i < 4; ++i) v[i] = RationalFunction(X) * s1[i] + s2[i];
  const auto c2 = solve_in_span(v, {s1, s2});
  REQUIRE(c2);
  CHECK(*c2 == RFVector{X, 1});

  // Span {dx2, dx4 - x1 dx3} in rank 4; dx3 is not in it.
  const RFVector dx2{0, 1, 0, 0}, mixed{0, 0, -X, 1}, dx3{0, 0, 1, 0};
  CHECK_FALSE(solve_in_span(dx3, {dx2, mixed}).has_value());

  CHECK_THROWS_AS(solve_in_span(s1, {s2, s2}), RankDeficient);
}

TEST_CASE("kernel and span comparison") {
  const Scalar X = x(0);
  // Annihilator of {d1, d3 + x1 d4} is {dx2, dx4 - x1 dx3}.
  const std::vector<RFVector> h{{1, 0, 0, 0}, {0, 0, 1, X}};
  const auto ann = kernel(h, 4);
  REQUIRE(ann.size() == 2);
  CHECK(same_span(ann, {{0, 1, 0, 0}, {0, 0, -X, 1}}));
  CHECK_FALSE(same_span(ann, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
  for (const auto& w : ann) {
    for (const auto& row : h) {
      RationalFunction dot;
      for (std::size_t i = 0; i < 4; ++i) dot += row[i] * w[i];
      CHECK(dot.is_zero());
    }
  }
}
