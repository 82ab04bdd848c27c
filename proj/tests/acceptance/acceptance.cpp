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

// Acceptance checks. Prints one PASS/FAIL line per criterion on stdout and
// the supporting detail on stderr; exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "courant/dirac.hpp"
#include "courant/double_identities.hpp"
#include "courant/errors.hpp"
#include "courant/linear_algebra.hpp"
#include "courant/poisson.hpp"
#include "courant_oracle.hpp"
#include "double_fixtures.hpp"
#include "lie_oracles.hpp"

using namespace courant;
using namespace courant::testing;

namespace {

/// Collects failed expectations for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

RationalFunction rf(const Scalar& s) { return RationalFunction(s); }

std::string failing_clauses(const CheckReport& r) {
  std::string out;
  for (const Clause& c : r.clauses) {
    if (c.status != Status::Pass) out += (out.empty() ? "" : ", ") + c.id;
  }
  return out;
}

PlainSection plain(const DoubleSection& e) { return {e.X.components(), e.xi.components()}; }

bool same_algebroid(const LieAlgebroid& a, const LieAlgebroid& b) {
  return a.anchor() == b.anchor() && a.structure() == b.structure();
}

ScalarMatrix symplectic4() { return skew(4, {{0, 1, 1}, {2, 3, 1}}); }

PoissonTensor poisson(const ScalarMatrix& m) { return PoissonTensor(bivector(m.size(), m)); }

LieAlgebroid perturbed(const LieAlgebroid& g, std::size_t i, std::size_t j, std::size_t k) {
  auto t = g.structure();
  t[i][j][k] += RationalFunction(1);
  t[j][i][k] -= RationalFunction(1);
  return LieAlgebroid::lie_algebra(g.rank(), t, g.name() + "~");
}

// --- criteria ----------------------------------------------------------------

void courant_axioms(Criterion& c) {
  const ScalarMatrix pi = linear_poisson();
  const DoubleStructure by_hand = poisson_double(pi);
  const DoubleStructure library = canonical_double(poisson(pi));
  for (const DoubleStructure* D : {&by_hand, &library}) {
    const CheckReport r = check_courant_axioms(*D);
    c.expect(r.clauses.size() == 5, r.title + ": expected five clauses");
    for (const Clause& clause : r.clauses) {
      c.expect(clause.status == Status::Pass && clause.residuals.empty(), r.title + " clause " + clause.id);
    }
  }
}

void jacobi_anomaly_over_a_point(Criterion& c) {
  const DoubleStructure D(affine_algebra(), other_affine_algebra());
  std::size_t triples = 0;
  std::size_t nonzero_J = 0;
  for (std::size_t i = 0; i < D.frame_size(); ++i) {
    for (std::size_t j = i; j < D.frame_size(); ++j) {
      for (std::size_t k = j; k < D.frame_size(); ++k) {
        const AnomalyReport a = jacobi_anomaly(D, D.frame(i), D.frame(j), D.frame(k));
        c.expect(a.residual.is_zero(), "residual nonzero on (" + D.frame_name(i) + "," + D.frame_name(j) + "," +
                                           D.frame_name(k) + ")");
        ++triples;
        nonzero_J += a.J.is_zero() ? 0 : 1;
      }
    }
  }
  c.expect(triples == 20, "expected 20 frame triples");
  c.note("residual zero on " + std::to_string(triples) + " triples; J nonzero on " + std::to_string(nonzero_J));
  const bool compatible = check_bialgebroid(D).passed();
  c.note(std::string("structure-constant cocycle oracle: ") + (is_lie_bialgebra(D) ? "bialgebra" : "not a bialgebra"));
  c.expect(!compatible, "check_bialgebroid passes on [e1,e2]=e2, [eps1,eps2]=eps1: the pair is a Lie bialgebra");
  // The separation the criterion asks for, on a pair that is not a bialgebra.
  const DoubleStructure S(so3(), so3("so3'"));
  bool residual_zero = true;
  for (std::size_t i = 0; i < S.frame_size(); ++i) {
    for (std::size_t j = i; j < S.frame_size(); ++j) {
      for (std::size_t k = j; k < S.frame_size(); ++k) {
        residual_zero = residual_zero && jacobi_anomaly(S, S.frame(i), S.frame(j), S.frame(k)).residual.is_zero();
      }
    }
  }
  c.note(std::string("so3 + so3: residual ") + (residual_zero ? "zero" : "nonzero") + ", check_bialgebroid " +
         (check_bialgebroid(S).passed() ? "passes" : "fails"));
}

void maurer_cartan(Criterion& c) {
  Rng rng(3);
  const std::vector<DoubleStructure> doubles = {standard_double(2), standard_double(3), poisson_double(linear_poisson())};
  std::size_t tried_H = 0;
  std::size_t tried_I = 0;
  std::size_t dirac_H = 0;
  std::size_t dirac_I = 0;
  for (const DoubleStructure& D : doubles) {
    const std::size_t n = D.rank();
    const ScalarShape shape{n, 1, 3};
    for (int k = 0; k < 10; ++k) {
      const GradedSection H = random_section(rng, n, 2, shape, D.A().vector_host());
      const bool mc = mc_residual_H(D, H).is_zero();
      const bool oracle = integrability_oracle(graph_subbundle(D, BivectorOperator{H})).passed();
      c.expect(mc == oracle, "H disagreement on " + D.A().name() + "+" + D.Astar().name() + ": " + H.to_string("e"));
      ++tried_H;
      dirac_H += oracle ? 1 : 0;
      const GradedSection I = random_section(rng, n, 2, shape, D.A().form_host());
      const bool mc_I = mc_residual_I(D, I).is_zero();
      const bool oracle_I = integrability_oracle(graph_subbundle(D, TwoFormOperator{I})).passed();
      c.expect(mc_I == oracle_I, "I disagreement: " + I.to_string("eps"));
      ++tried_I;
      dirac_I += oracle_I ? 1 : 0;
    }
  }
  c.expect(tried_H >= 20 && tried_I >= 20, "too few samples");
  c.expect(dirac_H > 0 && dirac_H < tried_H, "H samples do not exercise both verdicts");
  c.expect(dirac_I > 0 && dirac_I < tried_I, "I samples do not exercise both verdicts");
  c.note("H: " + std::to_string(dirac_H) + "/" + std::to_string(tried_H) + " Dirac; I: " + std::to_string(dirac_I) +
         "/" + std::to_string(tried_I) + " Dirac");
}

void composition_law(Criterion& c) {
  const Scalar x1 = x(0);
  const Scalar x3 = x(2);
  const PoissonTensor U = poisson(symplectic4());
  const PoissonTensor V = poisson(skew(4, {{0, 1, x1}, {2, 3, x3}}));
  const RFMatrix W = compose_plus(U, V).matrix();
  c.expect(W[0][1] == RationalFunction(x1, x1 + Scalar(1)), "compose_plus block 12");
  c.expect(W[2][3] == RationalFunction(x3, x3 + Scalar(1)), "compose_plus block 34");
  c.expect(W[0][2].is_zero() && W[0][3].is_zero() && W[1][2].is_zero() && W[1][3].is_zero(), "off-block entries");
  const GradedSection Wb = from_coefficient_matrix(W);
  c.expect(LieAlgebroid::tangent(4).schouten(Wb, Wb).is_zero(), "[W, W] is not zero");
  c.expect(is_poisson(Wb).passed(), "is_poisson(W)");
  const RFMatrix u = U.matrix();
  const RFMatrix v = V.matrix();
  c.expect(invert_matrix(invert_matrix(u) + invert_matrix(v)) == W, "(U^-1 + V^-1)^-1 differs from W");

  const MinusComposition m = compose_minus(U, V);
  const RFMatrix minus = coefficient_matrix(m.induced);
  c.expect(minus[0][1] == RationalFunction(x1.scaled(Rational(-2)), Scalar(1) - x1), "compose_minus block 12");
  c.expect(minus[2][3] == RationalFunction(x3.scaled(Rational(-2)), Scalar(1) - x3), "compose_minus block 34");
  const CheckReport pair = check_bialgebroid(m.pair);
  c.expect(pair.passed(), "(T*U, T*V) fails check_bialgebroid: " + failing_clauses(pair));
}

void duality(Criterion& c) {
  const std::vector<std::pair<std::string, std::function<DoubleStructure()>>> fixtures = {
      {"standard R^2", [] { return standard_double(2); }},
      {"linear Poisson R^3", [] { return poisson_double(linear_poisson()); }},
      {"symplectic R^4", [] { return canonical_double(poisson(symplectic4())); }},
      {"so3 Manin", [] { return manin_double(so3()); }},
      {"aff pair", [] { return DoubleStructure(affine_algebra(), other_affine_algebra()); }},
      {"so3 + so3", [] { return DoubleStructure(so3(), so3("so3'")); }},
      {"TR^2 + TR^2", [] { return DoubleStructure(LieAlgebroid::tangent(2, "T"), LieAlgebroid::tangent(2, "T'")); }},
      {"compose_minus pair",
       [] { return compose_minus(poisson(symplectic4()), poisson(skew(4, {{0, 1, x(0)}, {2, 3, x(2)}}))).pair; }},
  };
  std::size_t passing = 0;
  std::size_t failing = 0;
  for (const auto& [name, make] : fixtures) {
    const DoubleStructure D = make();
    const bool direct = check_bialgebroid(D).passed();
    const bool flipped = check_bialgebroid(D.flip()).passed();
    c.expect(direct == flipped, name + ": flip disagrees");
    (direct ? passing : failing) += 1;
  }
  c.expect(fixtures.size() >= 6 && passing > 0 && failing > 0, "fixture set must include passing and failing pairs");
  c.note(std::to_string(fixtures.size()) + " fixtures, " + std::to_string(failing) + " failing");
}

void round_trip(Criterion& c) {
  const std::vector<std::pair<std::string, std::function<DoubleStructure()>>> fixtures = {
      {"standard R^3", [] { return standard_double(3); }},
      {"linear Poisson R^3", [] { return poisson_double(linear_poisson()); }},
      {"symplectic R^4", [] { return canonical_double(poisson(symplectic4())); }},
      {"so3 Manin", [] { return manin_double(so3()); }},
      {"aff pair", [] { return DoubleStructure(affine_algebra(), other_affine_algebra()); }},
  };
  for (const auto& [name, make] : fixtures) {
    const DoubleStructure D = make();
    std::vector<DoubleSection> a;
    std::vector<DoubleSection> b;
    for (std::size_t i = 0; i < D.rank(); ++i) {
      a.push_back(D.frame(i));
      b.push_back(D.frame(D.rank() + i));
    }
    const DoubleStructure R = recover_bialgebroid(D, SubbundleSpec(D, a), SubbundleSpec(D, b));
    c.expect(same_algebroid(R.A(), D.A()) && same_algebroid(R.Astar(), D.Astar()), name + ": tables differ");
  }
  // Graphs of hamiltonian operators.
  const std::vector<std::tuple<std::string, DoubleStructure, GradedSection>> graphs = {
      {"linear Poisson R^3, H = d1^d2", poisson_double(linear_poisson()), bivector(3, skew(3, {{0, 1, 1}}))},
      {"standard R^3, H = linear Poisson", standard_double(3), bivector(3, linear_poisson())},
      {"standard R^2, H = x1 d1^d2", standard_double(2), bivector(2, skew(2, {{0, 1, x(0)}}))},
  };
  for (const auto& [name, D, H] : graphs) {
    std::vector<DoubleSection> a;
    for (std::size_t i = 0; i < D.rank(); ++i) a.push_back(D.frame(i));
    const DoubleStructure R = recover_bialgebroid(D, SubbundleSpec(D, a), graph_subbundle(D, BivectorOperator{H}));
    c.expect(same_algebroid(R.Astar(), induced_dual_algebroid(D, H)), name + ": recovered dual differs");
  }
}

void lemma_suites(Criterion& c) {
  const std::vector<std::pair<std::string, DoubleStructure>> any_pair = {
      {"standard R^2", standard_double(2)},
      {"TR^2 + TR^2", DoubleStructure(LieAlgebroid::tangent(2, "T"), LieAlgebroid::tangent(2, "T'"))},
      {"linear Poisson R^3", poisson_double(linear_poisson())},
      {"so3 + so3", DoubleStructure(so3(), so3("so3'"))},
      {"aff pair", DoubleStructure(affine_algebra(), other_affine_algebra())},
  };
  for (const auto& [name, D] : any_pair) {
    const CheckReport r = check_structure_identities(D, frame_triples(D));
    c.expect(r.passed(), name + ": " + failing_clauses(r));
  }
  const std::vector<std::pair<std::string, DoubleStructure>> bialgebroids = {
      {"standard R^2", standard_double(2)},
      {"linear Poisson R^3", poisson_double(linear_poisson())},
      {"so3 Manin", manin_double(so3())},
      {"aff pair", DoubleStructure(affine_algebra(), other_affine_algebra())},
  };
  for (const auto& [name, D] : bialgebroids) {
    const CheckReport r = check_bialgebroid_identities(D, frame_triples(D));
    c.expect(r.passed(), name + ": " + failing_clauses(r));
  }

  // Mutation harness: perturb one structure constant of a Lie bialgebra and
  // run every suite. The structure-constant oracles decide which mutants
  // are still bialgebras; every other mutant must fail some clause.
  std::size_t mutants = 0;
  std::size_t broken = 0;
  std::size_t killed = 0;
  const auto run_suites = [](const DoubleStructure& M) {
    if (!check_lie_algebroid(M.A()).passed() || !check_lie_algebroid(M.Astar()).passed()) return true;
    const auto triples = frame_triples(M);
    return !check_courant_axioms(M).passed() || !check_bialgebroid(M).passed() ||
           !check_structure_identities(M, triples).passed() || !check_bialgebroid_identities(M, triples).passed();
  };
  const std::vector<std::pair<LieAlgebroid, LieAlgebroid>> seeds = {
      {so3(), LieAlgebroid::lie_algebra(3, LieAlgebroid::empty_table(3), "ab")},
      {affine_algebra(), other_affine_algebra()},
  };
  for (const auto& [g, h] : seeds) {
    for (int side = 0; side < 2; ++side) {
      const LieAlgebroid& target = side == 0 ? g : h;
      for (std::size_t i = 0; i < target.rank(); ++i) {
        for (std::size_t j = i + 1; j < target.rank(); ++j) {
          for (std::size_t k = 0; k < target.rank(); ++k) {
            const LieAlgebroid m = perturbed(target, i, j, k);
            const DoubleStructure M = side == 0 ? DoubleStructure(m, h) : DoubleStructure(g, m);
            const bool valid = jacobi_holds(M.A()) && jacobi_holds(M.Astar()) && is_lie_bialgebra(M);
            const bool caught = run_suites(M);
            ++mutants;
            broken += valid ? 0 : 1;
            killed += caught ? 1 : 0;
            std::ostringstream what;
            what << "mutant " << (side == 0 ? g.name() : h.name()) << " c^" << k + 1 << "_" << i + 1 << j + 1 << " + 1";
            c.expect(caught == !valid, what.str() + (valid ? ": valid but flagged" : ": invalid but every clause passed"));
          }
        }
      }
    }
  }
  c.expect(broken >= 10, "fewer than 10 invalid mutants");
  c.note(std::to_string(mutants) + " mutants, " + std::to_string(broken) + " invalid, " + std::to_string(killed) +
         " caught");
}

void null_dirac(Criterion& c) {
  const DoubleStructure D = poisson_double(symplectic4());
  const LieAlgebroid& T = D.A();
  const std::vector<GradedSection> h = {vec(T, {1, 0, 0, 0}), vec(T, {0, 0, 1, rf(x(0))})};
  const CheckReport r = null_dirac_check(D, h);
  const Clause* closure = r.find("h.closure");
  const Clause* perp = r.find("h-perp.closure");
  c.expect(closure && closure->status == Status::Fail, "h.closure should fail");
  c.expect(perp && perp->status == Status::Fail, "h-perp.closure should fail");
  const auto single = [](const Clause* clause) {
    if (!clause || clause->residuals.size() != 1 || clause->residuals[0].components.size() != 1) return std::string();
    const auto& [label, value] = clause->residuals[0].components[0];
    return label + "=" + value.to_string();
  };
  // [d1, d3 + x1 d4] = d4 escapes h; [dx2, x1 dx3 - dx4] = -dx3 escapes h-perp.
  c.expect(single(closure) == "e4=1", "h.closure witness: " + single(closure));
  const std::string w = single(perp);
  c.expect(w == "e3=1" || w == "e3=-1", "h-perp.closure witness: " + w);

  c.expect(null_dirac_check(D, {vec(T, {1, 0, 0, 0})}).passed(), "h = {d1} should pass");
  const SubbundleSpec L = dual_pair(poisson(symplectic4()), {vec(LieAlgebroid::tangent(4), {1, 0, 0, 0})});
  std::vector<RFVector> vectors;
  for (const DoubleSection& s : L.spanning()) {
    if (s.xi.is_zero()) vectors.push_back(s.X.components());
  }
  const std::vector<RFVector> expected = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  c.expect(vectors == expected, "dual_pair vector part is not span{d1, d3, d4}");

  struct Shared {
    std::string name;
    ScalarMatrix pi;
    std::vector<std::vector<RationalFunction>> h;
  };
  const std::vector<Shared> shared = {
      {"R^2, {d1}", skew(2, {{0, 1, 1}}), {{1, 0}}},
      {"R^4, {d1}", symplectic4(), {{1, 0, 0, 0}}},
      {"R^4, {d1, d3 + x1 d4}", symplectic4(), {{1, 0, 0, 0}, {0, 0, 1, rf(x(0))}}},
      {"R^4, {d1, d2}", symplectic4(), {{1, 0, 0, 0}, {0, 1, 0, 0}}},
      {"R^4, {d1, d3}", symplectic4(), {{1, 0, 0, 0}, {0, 0, 1, 0}}},
      {"R^3 linear, {d3}", linear_poisson(), {{0, 0, 1}}},
      {"R^3 linear, {d1, d2}", linear_poisson(), {{1, 0, 0}, {0, 1, 0}}},
  };
  std::size_t agreeing = 0;
  for (const Shared& s : shared) {
    const PoissonTensor pi = poisson(s.pi);
    const DoubleStructure P = canonical_double(pi);
    const LieAlgebroid T0 = LieAlgebroid::tangent(s.pi.size());
    std::vector<GradedSection> on_P;
    std::vector<GradedSection> on_T;
    for (const auto& v : s.h) {
      on_P.push_back(vec(P.A(), v));
      on_T.push_back(vec(T0, v));
    }
    const bool nd = null_dirac_check(P, on_P).passed();
    const bool red = reduction_check(pi, on_T).passed();
    c.expect(nd == red, s.name + ": reduction_check and null_dirac_check disagree");
    agreeing += nd == red ? 1 : 0;
  }
  c.note(std::to_string(agreeing) + "/" + std::to_string(shared.size()) + " shared fixtures agree");
}

void t_value(Criterion& c) {
  const DoubleStructure D = standard_double(2);
  const DoubleSection e1 = D.from_vector(D.A().frame(0));
  const DoubleSection e2 = D.from_components({0, 0}, {0, rf(x(0))});
  const DoubleSection e3 = D.from_vector(D.A().frame(1));
  c.expect(D.T(e1, e2, e3) == RationalFunction(Rational(1, 4)), "T = " + D.T(e1, e2, e3).to_string());
  c.expect(plain_T(plain(e1), plain(e2), plain(e3)) == RationalFunction(Rational(1, 4)), "brute-force T differs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria = {
      {"Courant axioms on (TR^3, T*R^3_pi)", courant_axioms},
      {"Jacobi anomaly over a point and separation from compatibility", jacobi_anomaly_over_a_point},
      {"Maurer-Cartan residual agrees with the integrability oracle", maurer_cartan},
      {"composition of Poisson tensors on R^4", composition_law},
      {"bialgebroid check is invariant under the flip", duality},
      {"recovering a bialgebroid from a Manin triple", round_trip},
      {"identity suites and mutation harness", lemma_suites},
      {"null Dirac structures and reduction", null_dirac},
      {"T on the standard R^2 double", t_value},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << criteria[i].first
              << std::endl;
    for (const std::string& n : c.notes()) std::cerr << "  criterion " << i + 1 << " note: " << n << "\n";
    for (const std::string& f : c.failures()) std::cerr << "  criterion " << i + 1 << " failure: " << f << "\n";
    failed += c.passed() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
