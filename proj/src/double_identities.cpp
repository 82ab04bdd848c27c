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

#include "courant/double_identities.hpp"

namespace courant {

namespace {

std::vector<std::pair<std::string, RationalFunction>> labelled(const GradedSection& s, const std::string& symbol) {
  std::vector<std::pair<std::string, RationalFunction>> out;
  for (const auto& [I, c] : s.coefficients()) out.emplace_back(frame_label(symbol, I), c);
  return out;
}

std::vector<std::pair<std::string, RationalFunction>> labelled(const DoubleSection& e) {
  auto out = labelled(e.X, "e");
  auto dual = labelled(e.xi, "eps");
  out.insert(out.end(), dual.begin(), dual.end());
  return out;
}

std::string witness(std::size_t k) { return "triple " + std::to_string(k + 1); }

const RationalFunction& half() {
  static const RationalFunction h(Rational(1, 2));
  return h;
}

}  // namespace

std::vector<SectionTriple> frame_triples(const DoubleStructure& D) {
  const std::size_t n = D.frame_size();
  std::vector<SectionTriple> out;
  out.reserve(n * n * n);
  const auto multiplied = [&](std::size_t i, int slot) {
    return D.frame(i).scaled(RationalFunction(formal_function("f" + std::to_string(slot))));
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) out.push_back({multiplied(a, 1), multiplied(b, 2), multiplied(c, 3)});
    }
  }
  return out;
}

CheckReport check_structure_identities(const DoubleStructure& D, const std::vector<SectionTriple>& triples) {
  const LieAlgebroid& A = D.A();
  const LieAlgebroid& As = D.Astar();
  CheckReport report;
  report.title = "structure-identities " + A.name() + " + " + As.name();
  Clause& closed = report.add_clause("T-closed-form", "T from its definition equals the closed form");
  Clause& skew = report.add_clause("T-skew", "T(e1,e2,e3) = -T(e2,e1,e3) = -T(e1,e3,e2)");
  Clause& t1 = report.add_clause("T1", "([e1,e2],e3)_+ = T + 1/2 rho(e1)(e2,e3)_+ - 1/2 rho(e2)(e3,e1)_+");
  Clause& interior = report.add_clause(
      "interior", "i_X L_xi d eta = [xi, L_X eta] - L_{L_xi X} eta + [d<eta,X>, xi] + d(a*(xi)<eta,X>) - d<[xi,eta],X>");
  Clause& minus = report.add_clause(
      "minus-cyclic", "([e1,e2],e3)_- + c.p. = T + {a(X3)phi + 2 a*(xi3)phi - <[xi1,xi2],X3>} + c.p.");

  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& [e1, e2, e3] = triples[k];
    const RationalFunction T = D.T(e1, e2, e3);
    closed.record(witness(k), T - D.T_closed_form(e1, e2, e3));
    skew.record(witness(k), {{"swap12", T + D.T(e2, e1, e3)}, {"swap23", T + D.T(e1, e3, e2)}});

    const RationalFunction lhs1 = D.pairing(D.bracket(e1, e2), e3, Sign::Plus);
    const RationalFunction rhs1 = T + half() * D.rho_apply(e1, D.pairing(e2, e3, Sign::Plus)) -
                                  half() * D.rho_apply(e2, D.pairing(e3, e1, Sign::Plus));
    t1.record(witness(k), lhs1 - rhs1);

    const GradedSection& X = e1.X;
    const GradedSection& xi = e2.xi;
    const GradedSection& eta = e3.xi;
    const RationalFunction eta_X = pair(eta, X);
    GradedSection lemma = contract(X, As.schouten(xi, A.d(eta))).with_host(A.form_host());
    lemma -= As.bracket(xi, A.lie_derivative(X, eta));
    lemma += A.lie_derivative(As.lie_derivative(xi, X), eta);
    lemma -= As.bracket(A.d(eta_X), xi);
    lemma -= A.d(As.derivation(xi, eta_X));
    lemma += A.d(pair(As.bracket(xi, eta), X));
    interior.record(witness(k), labelled(lemma, "eps"));

    const SectionTriple cyc[3] = {{e1, e2, e3}, {e2, e3, e1}, {e3, e1, e2}};
    RationalFunction lhs2;
    RationalFunction rhs2 = T;
    for (const auto& [a, b, c] : cyc) {
      const RationalFunction phi = D.pairing(a, b, Sign::Minus);
      lhs2 += D.pairing(D.bracket(a, b), c, Sign::Minus);
      rhs2 += A.derivation(c.X, phi) + RationalFunction(2) * As.derivation(c.xi, phi) - pair(As.bracket(a.xi, b.xi), c.X);
    }
    minus.record(witness(k), lhs2 - rhs2);
  }
  return report;
}

CheckReport check_bialgebroid_identities(const DoubleStructure& D, const std::vector<SectionTriple>& triples) {
  const LieAlgebroid& A = D.A();
  const LieAlgebroid& As = D.Astar();
  CheckReport report;
  report.title = "bialgebroid-identities " + A.name() + " + " + As.name();
  Clause& leibniz = report.add_clause("leibniz", "[e1, g e2] = g[e1,e2] + (rho(e1)g) e2 - (e1,e2)_+ D g");
  Clause& anchor = report.add_clause("anchor", "rho[e1,e2] = [rho e1, rho e2] on a formal g");
  Clause& mixed =
      report.add_clause("mixed-anchor", "[a(X), a*(xi)] = a*(L_X xi) - a(L_xi X) + a a*^T d<xi,X> on a formal g");
  Clause& invariance = report.add_clause(
      "invariance", "rho(e)(h1,h2)_+ = ([e,h1] + D(e,h1)_+, h2)_+ + (h1, [e,h2] + D(e,h2)_+)_+");
  Clause& exchange = report.add_clause("exchange", "L_{d_* g} xi = -[dg, xi] and L_{dg} X = -[d_* g, X]");
  const RationalFunction g(formal_function("g"));
  const GradedSection dg = A.d(g);
  const GradedSection dsg = As.d(g);

  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& [e1, e2, e3] = triples[k];
    const DoubleSection b12 = D.bracket(e1, e2);

    DoubleSection r = D.bracket(e1, e2.scaled(g)) - b12.scaled(g) - e2.scaled(D.rho_apply(e1, g)) +
                      D.script_D(g).scaled(D.pairing(e1, e2, Sign::Plus));
    leibniz.record(witness(k), labelled(r));

    anchor.record(witness(k), D.rho_apply(b12, g) - D.rho_apply(e1, D.rho_apply(e2, g)) +
                                  D.rho_apply(e2, D.rho_apply(e1, g)));

    const GradedSection& X = e1.X;
    const GradedSection& xi = e2.xi;
    const RationalFunction lhs3 = A.derivation(X, As.derivation(xi, g)) - As.derivation(xi, A.derivation(X, g));
    const RationalFunction rhs3 = As.derivation(A.lie_derivative(X, xi), g) -
                                  A.derivation(As.lie_derivative(xi, X), g) + pair(dg, As.d(pair(xi, X)));
    mixed.record(witness(k), lhs3 - rhs3);

    const RationalFunction lhs4 = D.rho_apply(e1, D.pairing(e2, e3, Sign::Plus));
    const RationalFunction rhs4 = D.pairing(D.twisted_bracket(e1, e2), e3, Sign::Plus) +
                                  D.pairing(e2, D.twisted_bracket(e1, e3), Sign::Plus);
    invariance.record(witness(k), lhs4 - rhs4);

    const GradedSection ex1 = A.lie_derivative(dsg, e3.xi) + As.bracket(dg, e3.xi);
    const GradedSection ex2 = As.lie_derivative(dg, e3.X) + A.bracket(dsg, e3.X);
    auto components = labelled(ex1, "eps");
    auto more = labelled(ex2, "e");
    components.insert(components.end(), more.begin(), more.end());
    exchange.record(witness(k), components);
  }
  return report;
}

}  // namespace courant
