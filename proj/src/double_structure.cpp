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

#include "courant/double_structure.hpp"

#include <array>

#include "courant/errors.hpp"

namespace courant {

namespace {

std::vector<std::pair<std::string, RationalFunction>> labelled(const DoubleSection& e) {
  std::vector<std::pair<std::string, RationalFunction>> out;
  for (const auto& [I, c] : e.X.coefficients()) out.emplace_back(frame_label("e", I), c);
  for (const auto& [I, c] : e.xi.coefficients()) out.emplace_back(frame_label("eps", I), c);
  return out;
}

/// Frame section E_i carrying the formal multiplier `_f<slot>`.
DoubleSection multiplied(const DoubleStructure& D, std::size_t i, int slot) {
  return D.frame(i).scaled(RationalFunction(formal_function("f" + std::to_string(slot))));
}

std::string tuple_label(const DoubleStructure& D, std::initializer_list<std::size_t> indices) {
  std::string out = "(";
  int slot = 1;
  for (std::size_t i : indices) {
    if (slot > 1) out += ", ";
    out += "f" + std::to_string(slot++) + "*" + D.frame_name(i);
  }
  return out + ")";
}

}  // namespace

DoubleSection& DoubleSection::operator+=(const DoubleSection& rhs) {
  X += rhs.X;
  xi += rhs.xi;
  return *this;
}

DoubleSection& DoubleSection::operator-=(const DoubleSection& rhs) {
  X -= rhs.X;
  xi -= rhs.xi;
  return *this;
}

DoubleStructure::DoubleStructure(const LieAlgebroid& A, const LieAlgebroid& Astar)
    : A_(A), Astar_(Astar.as_dual_of(A)) {}

DoubleStructure DoubleStructure::flip() const { return DoubleStructure(Astar_, A_); }

DoubleSection DoubleStructure::zero() const { return {A_.zero_vector(), A_.zero_form(1)}; }

DoubleSection DoubleStructure::from_vector(const GradedSection& X) const {
  return {X.with_host(common_host(X.host(), A_.vector_host())), A_.zero_form(1)};
}

DoubleSection DoubleStructure::from_form(const GradedSection& xi) const {
  return {A_.zero_vector(), xi.with_host(common_host(xi.host(), A_.form_host()))};
}

DoubleSection DoubleStructure::from_components(const std::vector<RationalFunction>& X,
                                               const std::vector<RationalFunction>& xi) const {
  if (X.size() != rank() || xi.size() != rank()) throw ShapeError("double section components must match the rank");
  return {GradedSection::vector(X, A_.vector_host()), GradedSection::vector(xi, A_.form_host())};
}

DoubleSection DoubleStructure::frame(std::size_t i) const {
  if (i < rank()) return from_vector(A_.frame(i));
  if (i < frame_size()) return from_form(A_.coframe(i - rank()));
  throw ShapeError("frame index out of range");
}

std::string DoubleStructure::frame_name(std::size_t i) const {
  return i < rank() ? "e" + std::to_string(i + 1) : "eps" + std::to_string(i - rank() + 1);
}

RationalFunction DoubleStructure::pairing(const DoubleSection& e1, const DoubleSection& e2, Sign sign) const {
  const RationalFunction a = pair(e1.xi, e2.X);
  const RationalFunction b = pair(e2.xi, e1.X);
  return (sign == Sign::Plus ? a + b : a - b) * RationalFunction(Rational(1, 2));
}

DoubleSection DoubleStructure::bracket(const DoubleSection& e1, const DoubleSection& e2) const {
  const RationalFunction phi = pairing(e1, e2, Sign::Minus);
  DoubleSection out;
  out.X = A_.bracket(e1.X, e2.X);
  out.X += Astar_.lie_derivative(e1.xi, e2.X);
  out.X -= Astar_.lie_derivative(e2.xi, e1.X);
  out.X -= Astar_.d(phi);
  out.xi = Astar_.bracket(e1.xi, e2.xi);
  out.xi += A_.lie_derivative(e1.X, e2.xi);
  out.xi -= A_.lie_derivative(e2.X, e1.xi);
  out.xi += A_.d(phi);
  return out;
}

RFVector DoubleStructure::rho(const DoubleSection& e) const {
  RFVector out = A_.anchor_image(e.X);
  const RFVector dual = Astar_.anchor_image(e.xi);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += dual[k];
  return out;
}

RationalFunction DoubleStructure::rho_apply(const DoubleSection& e, const RationalFunction& f) const {
  return A_.derivation(e.X, f) + Astar_.derivation(e.xi, f);
}

DoubleSection DoubleStructure::script_D(const RationalFunction& f) const { return {Astar_.d(f), A_.d(f)}; }

RationalFunction DoubleStructure::T(const DoubleSection& e1, const DoubleSection& e2, const DoubleSection& e3) const {
  RationalFunction sum = pairing(bracket(e1, e2), e3, Sign::Plus);
  sum += pairing(bracket(e2, e3), e1, Sign::Plus);
  sum += pairing(bracket(e3, e1), e2, Sign::Plus);
  return sum * RationalFunction(Rational(1, 3));
}

RationalFunction DoubleStructure::T_closed_form(const DoubleSection& e1, const DoubleSection& e2,
                                                const DoubleSection& e3) const {
  const auto term = [&](const DoubleSection& a, const DoubleSection& b, const DoubleSection& c) {
    const RationalFunction phi = pairing(a, b, Sign::Minus);
    return pair(c.xi, A_.bracket(a.X, b.X)) + pair(Astar_.bracket(a.xi, b.xi), c.X) + A_.derivation(c.X, phi) -
           Astar_.derivation(c.xi, phi);
  };
  return (term(e1, e2, e3) + term(e2, e3, e1) + term(e3, e1, e2)) * RationalFunction(Rational(1, 2));
}

DoubleSection DoubleStructure::twisted_bracket(const DoubleSection& e, const DoubleSection& h) const {
  return bracket(e, h) + script_D(pairing(e, h, Sign::Plus));
}

CheckReport check_courant_axioms(const DoubleStructure& D) {
  CheckReport report;
  report.title = "courant-axioms " + D.A().name() + " + " + D.Astar().name();
  const std::size_t n = D.frame_size();
  const RationalFunction f(formal_function("f"));
  const RationalFunction g(formal_function("g"));

  Clause& jacobi = report.add_clause("i", "[[e1,e2],e3] + c.p. = D T(e1,e2,e3)");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) {
        const DoubleSection e1 = multiplied(D, a, 1);
        const DoubleSection e2 = multiplied(D, b, 2);
        const DoubleSection e3 = multiplied(D, c, 3);
        DoubleSection J = D.bracket(D.bracket(e1, e2), e3);
        J += D.bracket(D.bracket(e2, e3), e1);
        J += D.bracket(D.bracket(e3, e1), e2);
        J -= D.script_D(D.T(e1, e2, e3));
        jacobi.record(tuple_label(D, {a, b, c}), labelled(J));
      }
    }
  }

  Clause& morphism = report.add_clause("ii", "rho[e1,e2] = [rho e1, rho e2] as derivations of a formal f");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const DoubleSection e1 = multiplied(D, a, 1);
      const DoubleSection e2 = multiplied(D, b, 2);
      const RationalFunction lhs = D.rho_apply(D.bracket(e1, e2), f);
      const RationalFunction rhs = D.rho_apply(e1, D.rho_apply(e2, f)) - D.rho_apply(e2, D.rho_apply(e1, f));
      morphism.record(tuple_label(D, {a, b}), lhs - rhs);
    }
  }

  Clause& leibniz = report.add_clause("iii", "[e1, f e2] = f[e1,e2] + (rho(e1) f) e2 - (e1,e2)_+ D f");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const DoubleSection e1 = multiplied(D, a, 1);
      const DoubleSection e2 = multiplied(D, b, 2);
      DoubleSection r = D.bracket(e1, e2.scaled(f));
      r -= D.bracket(e1, e2).scaled(f);
      r -= e2.scaled(D.rho_apply(e1, f));
      r += D.script_D(f).scaled(D.pairing(e1, e2, Sign::Plus));
      leibniz.record(tuple_label(D, {a, b}), labelled(r));
    }
  }

  Clause& exact = report.add_clause("iv", "(D f, D g)_+ = 0");
  exact.record("(f, g)", D.pairing(D.script_D(f), D.script_D(g), Sign::Plus));

  Clause& invariance = report.add_clause(
      "v", "rho(e)(h1,h2)_+ = ([e,h1] + D(e,h1)_+, h2)_+ + (h1, [e,h2] + D(e,h2)_+)_+");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) {
        const DoubleSection e = multiplied(D, a, 1);
        const DoubleSection h1 = multiplied(D, b, 2);
        const DoubleSection h2 = multiplied(D, c, 3);
        const RationalFunction lhs = D.rho_apply(e, D.pairing(h1, h2, Sign::Plus));
        const RationalFunction rhs = D.pairing(D.twisted_bracket(e, h1), h2, Sign::Plus) +
                                     D.pairing(h1, D.twisted_bracket(e, h2), Sign::Plus);
        invariance.record(tuple_label(D, {a, b, c}), lhs - rhs);
      }
    }
  }
  return report;
}

void require_algebroids(const DoubleStructure& D) {
  for (const LieAlgebroid* L : {&D.A(), &D.Astar()}) {
    if (!check_lie_algebroid(*L).passed()) throw HypothesisFailure(L->name() + " is not a Lie algebroid");
  }
}

AnomalyReport jacobi_anomaly(const DoubleStructure& D, const DoubleSection& e1, const DoubleSection& e2,
                             const DoubleSection& e3) {
  require_algebroids(D);
  const LieAlgebroid& A = D.A();
  const LieAlgebroid& As = D.Astar();

  const auto J1 = [&](const DoubleSection& a, const DoubleSection& b, const DoubleSection& c) {
    GradedSection dual = A.d(As.bracket(a.xi, b.xi));
    dual -= As.schouten(a.xi, A.d(b.xi));
    dual += As.schouten(b.xi, A.d(a.xi));
    GradedSection primal = As.d(A.bracket(a.X, b.X));
    primal -= A.schouten(a.X, As.d(b.X));
    primal += A.schouten(b.X, As.d(a.X));
    return DoubleSection{contract(c.xi, primal).with_host(A.vector_host()),
                         contract(c.X, dual).with_host(A.form_host())};
  };
  const auto J2 = [&](const DoubleSection& a, const DoubleSection& b, const DoubleSection& c) {
    const RationalFunction phi = D.pairing(a, b, Sign::Minus);
    DoubleSection out;
    out.xi = A.lie_derivative(As.d(phi), c.xi) + As.bracket(A.d(phi), c.xi);
    out.X = As.lie_derivative(A.d(phi), c.X) + A.bracket(As.d(phi), c.X);
    return out;
  };

  AnomalyReport r;
  const std::array<std::array<const DoubleSection*, 3>, 3> cyclic{{{&e1, &e2, &e3}, {&e2, &e3, &e1}, {&e3, &e1, &e2}}};
  r.J = D.zero();
  r.J1_cp = D.zero();
  r.J2_cp = D.zero();
  for (const auto& [a, b, c] : cyclic) {
    r.J += D.bracket(D.bracket(*a, *b), *c);
    r.J1_cp += J1(*a, *b, *c);
    r.J2_cp += J2(*a, *b, *c);
  }
  r.DT = D.script_D(D.T(e1, e2, e3));
  r.residual = r.J - r.DT + r.J1_cp + r.J2_cp;
  r.mirrored_residual = r.residual - DoubleSection{r.J2_cp.X.scaled(RationalFunction(2)), D.A().zero_form(1)};
  return r;
}

CheckReport check_bialgebroid(const DoubleStructure& D) {
  require_algebroids(D);
  const LieAlgebroid& A = D.A();
  const LieAlgebroid& As = D.Astar();
  CheckReport report;
  report.title = "bialgebroid " + A.name() + " + " + As.name();
  Clause& clause = report.add_clause("derivation", "d_*[X,Y] - L_X d_*Y + L_Y d_*X = 0 on frame sections");
  const RationalFunction f(formal_function("f1"));
  const RationalFunction g(formal_function("f2"));
  for (std::size_t i = 0; i < A.rank(); ++i) {
    for (std::size_t j = i; j < A.rank(); ++j) {
      const GradedSection X = A.frame(i).scaled(f);
      const GradedSection Y = A.frame(j).scaled(g);
      GradedSection r = As.d(A.bracket(X, Y));
      r -= A.schouten(X, As.d(Y));
      r += A.schouten(Y, As.d(X));
      clause.record("(f1*e" + std::to_string(i + 1) + ", f2*e" + std::to_string(j + 1) + ")", r, "e");
    }
  }
  return report;
}

}  // namespace courant
