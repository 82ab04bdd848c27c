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

#include "courant/dirac.hpp"

#include "courant/errors.hpp"

namespace courant {

namespace {

const RationalFunction& half() {
  static const RationalFunction h(Rational(1, 2));
  return h;
}

void require_bialgebroid(const DoubleStructure& D) {
  if (!check_bialgebroid(D).passed()) {
    throw HypothesisFailure("(" + D.A().name() + ", " + D.Astar().name() + ") is not a Lie bialgebroid");
  }
}

GradedSection on_A(const DoubleStructure& D, const GradedSection& H) {
  if (H.degree() != 2 || H.rank() != D.rank()) throw ShapeError("expected a bivector of A");
  return H.with_host(common_host(H.host(), D.A().vector_host()));
}

GradedSection on_Astar(const DoubleStructure& D, const GradedSection& I) {
  if (I.degree() != 2 || I.rank() != D.rank()) throw ShapeError("expected a 2-form of A");
  return I.with_host(common_host(I.host(), D.A().form_host()));
}

std::vector<GradedSection> rehost(const std::vector<GradedSection>& v, Host host) {
  std::vector<GradedSection> out;
  out.reserve(v.size());
  for (const GradedSection& s : v) out.push_back(s.with_host(host));
  return out;
}

std::vector<RFVector> component_rows(const std::vector<GradedSection>& v) {
  std::vector<RFVector> out;
  for (const GradedSection& s : v) out.push_back(s.components());
  return out;
}

}  // namespace

SubbundleSpec graph_subbundle(const DoubleStructure& D, const BivectorOperator& op) {
  const GradedSection H = on_A(D, op.H);
  std::vector<DoubleSection> spanning;
  for (std::size_t i = 0; i < D.rank(); ++i) {
    const GradedSection eps = D.A().coframe(i);
    spanning.push_back({sharp(H, eps), eps});
  }
  return SubbundleSpec(D, std::move(spanning), D.rank());
}

SubbundleSpec graph_subbundle(const DoubleStructure& D, const TwoFormOperator& op) {
  const GradedSection I = on_Astar(D, op.I);
  std::vector<DoubleSection> spanning;
  for (std::size_t i = 0; i < D.rank(); ++i) {
    const GradedSection e = D.A().frame(i);
    spanning.push_back({e, sharp(I, e)});
  }
  return SubbundleSpec(D, std::move(spanning), D.rank());
}

GradedSection mc_residual_H(const DoubleStructure& D, const GradedSection& H) {
  require_bialgebroid(D);
  const GradedSection h = on_A(D, H);
  return D.Astar().d(h) + D.A().schouten(h, h).scaled(half());
}

GradedSection mc_residual_I(const DoubleStructure& D, const GradedSection& I) {
  require_bialgebroid(D);
  const GradedSection i = on_Astar(D, I);
  return D.A().d(i) + D.Astar().schouten(i, i).scaled(half());
}

GradedSection bracket_H(const DoubleStructure& D, const GradedSection& H, const GradedSection& xi,
                        const GradedSection& eta) {
  const LieAlgebroid& A = D.A();
  const GradedSection h = on_A(D, H);
  GradedSection out = A.lie_derivative(sharp(h, xi), eta);
  out -= A.lie_derivative(sharp(h, eta), xi);
  out += A.d(pair(xi, sharp(h, eta)));
  return out;
}

CheckReport is_hamiltonian(const DoubleStructure& D, const GradedSection& H) {
  CheckReport report;
  report.title = "hamiltonian";
  report.add_clause("maurer-cartan", "d_* H + 1/2 [H, H] = 0").record("H", mc_residual_H(D, H), "e");
  return report;
}

CheckReport is_strong_hamiltonian(const DoubleStructure& D, const GradedSection& H) {
  require_bialgebroid(D);
  const GradedSection h = on_A(D, H);
  CheckReport report;
  report.title = "strong-hamiltonian";
  report.add_clause("d_*H", "d_* H = 0").record("H", D.Astar().d(h), "e");
  report.add_clause("[H,H]", "[H, H] = 0").record("H", D.A().schouten(h, h), "e");
  return report;
}

LieAlgebroid induced_dual_algebroid(const DoubleStructure& D, const GradedSection& H) {
  const GradedSection residual = mc_residual_H(D, H);
  if (!residual.is_zero()) throw NotHamiltonian("graph of H is not Dirac: " + residual.to_string("e"));
  const LieAlgebroid& A = D.A();
  const LieAlgebroid& As = D.Astar();
  const GradedSection h = on_A(D, H);
  const std::size_t r = D.rank();
  RFMatrix anchor;
  for (std::size_t i = 0; i < r; ++i) {
    RFVector row = As.anchor_image(A.coframe(i));
    const RFVector extra = A.anchor_image(sharp(h, A.coframe(i)));
    for (std::size_t k = 0; k < row.size(); ++k) row[k] += extra[k];
    anchor.push_back(std::move(row));
  }
  auto table = LieAlgebroid::empty_table(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const GradedSection b =
          As.bracket(A.coframe(i), A.coframe(j)) + bracket_H(D, h, A.coframe(i), A.coframe(j));
      table[i][j] = b.components();
      for (std::size_t k = 0; k < r; ++k) table[j][i][k] = -table[i][j][k];
    }
  }
  return LieAlgebroid(D.base_dim(), r, std::move(anchor), std::move(table), As.name() + "_H");
}

std::vector<GradedSection> annihilator(const LieAlgebroid& A, const std::vector<GradedSection>& h) {
  const std::vector<RFVector> rows = component_rows(h);
  if (!rows.empty() && rank(RFMatrix(rows.begin(), rows.end())) < rows.size()) {
    throw RankDeficient("spanning set is generically dependent");
  }
  std::vector<GradedSection> out;
  for (const RFVector& w : kernel(rows, A.rank())) out.push_back(GradedSection::vector(w, A.form_host()));
  return out;
}

SubbundleSpec null_subbundle(const DoubleStructure& D, const std::vector<GradedSection>& h) {
  const std::vector<GradedSection> hv = rehost(h, D.A().vector_host());
  std::vector<DoubleSection> spanning;
  for (const GradedSection& X : hv) spanning.push_back(D.from_vector(X));
  for (const GradedSection& xi : annihilator(D.A(), hv)) spanning.push_back(D.from_form(xi));
  return SubbundleSpec(D, std::move(spanning), D.rank());
}

CheckReport null_dirac_check(const DoubleStructure& D, const std::vector<GradedSection>& h) {
  const std::vector<GradedSection> hv = rehost(h, D.A().vector_host());
  const std::vector<GradedSection> perp = annihilator(D.A(), hv);
  CheckReport report;
  report.title = "null-dirac";
  report.merge(check_subalgebroid(D.A(), hv), "h.");
  report.merge(check_subalgebroid(D.Astar(), perp), "h-perp.");
  const SubbundleSpec L = null_subbundle(D, hv);
  Clause& iso = report.add_clause("isotropy", "(.,.)_- and (.,.)_+ vanish on h + h-perp");
  const auto& S = L.spanning();
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i; j < S.size(); ++j) {
      iso.record("(S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + ")",
                 {{"minus", D.pairing(S[i], S[j], Sign::Minus)}, {"plus", D.pairing(S[i], S[j], Sign::Plus)}});
    }
  }
  return report;
}

CheckReport reduction_check(const PoissonTensor& pi, const std::vector<GradedSection>& Dspec) {
  const LieAlgebroid T = LieAlgebroid::tangent(pi.base_dim());
  const LieAlgebroid C = cotangent_algebroid(pi).as_dual_of(T);
  const std::vector<GradedSection> dv = rehost(Dspec, T.vector_host());
  CheckReport report;
  report.title = "reduction";
  report.merge(check_subalgebroid(T, dv), "D.");
  report.merge(check_subalgebroid(C, annihilator(T, dv)), "D-perp.");
  return report;
}

SubbundleSpec dual_pair(const PoissonTensor& pi, const std::vector<GradedSection>& Dspec) {
  const RFMatrix P = operator_matrix(pi.bivector());
  const RFMatrix P_inverse = invert_matrix(P);
  const DoubleStructure D = canonical_double(pi);
  const std::vector<GradedSection> dv = rehost(Dspec, D.A().vector_host());
  if (!null_dirac_check(D, dv).passed()) throw NotNullDirac("D + D-perp is not a null Dirac structure");

  std::vector<RFVector> image;
  for (const GradedSection& alpha : annihilator(D.A(), dv)) image.push_back(P * alpha.components());
  std::vector<GradedSection> bar;
  if (!image.empty()) {
    std::vector<std::size_t> pivots;
    const RFMatrix reduced = row_reduce(RFMatrix(image.begin(), image.end()), &pivots);
    for (std::size_t i = 0; i < pivots.size(); ++i) bar.push_back(GradedSection::vector(reduced[i], D.A().vector_host()));
  }
  std::vector<RFVector> preimage;
  for (const GradedSection& X : dv) preimage.push_back(P_inverse * X.components());
  if (!same_span(component_rows(annihilator(D.A(), bar)), preimage)) {
    throw Error("annihilator of pi#(D-perp) differs from (pi#)^{-1}(D)");
  }
  return null_subbundle(D, bar);
}

}  // namespace courant
