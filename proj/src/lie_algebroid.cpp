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

#include "courant/lie_algebroid.hpp"

#include <atomic>

#include "courant/errors.hpp"

namespace courant {

namespace {

std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

Scalar formal_function(const std::string& name) { return Scalar::function("_" + name); }

LieAlgebroid::LieAlgebroid(std::size_t base_dim, std::size_t rank, RFMatrix anchor, StructureTable structure,
                           std::string name)
    : base_dim_(base_dim),
      rank_(rank),
      anchor_(std::move(anchor)),
      structure_(std::move(structure)),
      name_(std::move(name)),
      id_(next_id()),
      host_{id_, false} {
  if (base_dim_ > kMaxBaseDim) throw ShapeError("base dimension exceeds " + std::to_string(kMaxBaseDim));
  if (anchor_.size() != rank_) throw ShapeError("anchor must have one row per frame element");
  for (const auto& row : anchor_) {
    if (row.size() != base_dim_) throw ShapeError("anchor row length must equal the base dimension");
  }
  if (structure_.size() != rank_) throw ShapeError("structure table has the wrong size");
  for (std::size_t i = 0; i < rank_; ++i) {
    if (structure_[i].size() != rank_) throw ShapeError("structure table has the wrong size");
    for (std::size_t j = 0; j < rank_; ++j) {
      if (structure_[i][j].size() != rank_) throw ShapeError("structure vector has the wrong length");
    }
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t k = 0; k < rank_; ++k) {
        if (!(structure_[i][j][k] == -structure_[j][i][k])) {
          throw ShapeError("structure table is not antisymmetric");
        }
      }
    }
  }
}

LieAlgebroid::StructureTable LieAlgebroid::empty_table(std::size_t rank) {
  return StructureTable(rank, std::vector<RFVector>(rank, RFVector(rank)));
}

LieAlgebroid LieAlgebroid::tangent(std::size_t n, std::string name) {
  return LieAlgebroid(n, n, identity_matrix(n), empty_table(n), std::move(name));
}

LieAlgebroid LieAlgebroid::trivial(std::size_t n, std::size_t rank, std::string name) {
  return LieAlgebroid(n, rank, zero_matrix(rank, n), empty_table(rank), std::move(name));
}

LieAlgebroid LieAlgebroid::lie_algebra(std::size_t rank, StructureTable structure, std::string name) {
  return LieAlgebroid(0, rank, zero_matrix(rank, 0), std::move(structure), std::move(name));
}

LieAlgebroid LieAlgebroid::renamed(std::string name) const {
  return LieAlgebroid(base_dim_, rank_, anchor_, structure_, std::move(name));
}

LieAlgebroid LieAlgebroid::as_dual_of(const LieAlgebroid& other) const {
  if (other.rank_ != rank_ || other.base_dim_ != base_dim_) throw ShapeError("dual algebroids must share rank and base");
  LieAlgebroid out = *this;
  out.host_ = other.form_host();
  return out;
}

LieAlgebroid LieAlgebroid::reframed(const RFMatrix& M, std::string name) const {
  if (M.size() != rank_) throw ShapeError("frame change must be a square matrix of the rank");
  const RFMatrix inverse = invert_matrix(M);
  RFMatrix anchor = M * anchor_;
  auto table = empty_table(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    const GradedSection fi = GradedSection::vector(M[i], host_);
    for (std::size_t j = i + 1; j < rank_; ++j) {
      const RFVector old = bracket(fi, GradedSection::vector(M[j], host_)).components();
      // Row vector w with w M = old.
      RFVector w(rank_);
      for (std::size_t k = 0; k < rank_; ++k) {
        for (std::size_t m = 0; m < rank_; ++m) {
          if (!old[m].is_zero()) w[k] += old[m] * inverse[m][k];
        }
      }
      table[i][j] = w;
      for (std::size_t k = 0; k < rank_; ++k) table[j][i][k] = -w[k];
    }
  }
  return LieAlgebroid(base_dim_, rank_, std::move(anchor), std::move(table), std::move(name));
}

GradedSection LieAlgebroid::frame(std::size_t i) const { return GradedSection::basis(rank_, {i}, vector_host()); }

GradedSection LieAlgebroid::coframe(std::size_t i) const { return GradedSection::basis(rank_, {i}, form_host()); }

Host LieAlgebroid::expect(const GradedSection& s, Host host) const {
  if (s.rank() != rank_) throw ShapeError("section rank does not match the algebroid");
  (void)common_host(s.host(), host);
  return s.host();
}

RationalFunction LieAlgebroid::derivation(std::size_t i, const RationalFunction& f) const {
  RationalFunction out;
  if (f.is_constant()) return out;
  for (std::size_t k = 0; k < base_dim_; ++k) {
    const RationalFunction& a = anchor_[i][k];
    if (!a.is_zero()) out += a * f.differentiate(k);
  }
  return out;
}

RationalFunction LieAlgebroid::derivation(const GradedSection& X, const RationalFunction& f) const {
  if (X.degree() != 1) throw ShapeError("anchor applies to degree-1 sections");
  RationalFunction out;
  if (f.is_constant()) return out;
  for (std::size_t k = 0; k < base_dim_; ++k) {
    RationalFunction coeff;
    for (const auto& [idx, c] : X.coefficients()) {
      if (!anchor_[idx[0]][k].is_zero()) coeff += c * anchor_[idx[0]][k];
    }
    if (!coeff.is_zero()) out += coeff * f.differentiate(k);
  }
  return out;
}

RFVector LieAlgebroid::anchor_image(const GradedSection& X) const {
  if (X.degree() != 1) throw ShapeError("anchor applies to degree-1 sections");
  RFVector out(base_dim_);
  for (const auto& [idx, c] : X.coefficients()) {
    for (std::size_t k = 0; k < base_dim_; ++k) {
      if (!anchor_[idx[0]][k].is_zero()) out[k] += c * anchor_[idx[0]][k];
    }
  }
  return out;
}

GradedSection LieAlgebroid::frame_bracket(std::size_t i, std::size_t j) const {
  GradedSection out(rank_, 1);
  const RFVector& c = structure_[i][j];
  for (std::size_t k = 0; k < rank_; ++k) out.add({k}, c[k]);
  return out;
}

GradedSection LieAlgebroid::bracket(const GradedSection& X, const GradedSection& Y) const {
  if (X.degree() != 1 || Y.degree() != 1) throw ShapeError("bracket_sections needs degree-1 sections");
  const Host hx = expect(X, vector_host());
  const Host hy = expect(Y, vector_host());
  GradedSection out(rank_, 1, common_host(hx, hy));
  for (const auto& [ii, xi] : X.coefficients()) {
    for (const auto& [jj, yj] : Y.coefficients()) {
      const RFVector& c = structure_[ii[0]][jj[0]];
      for (std::size_t k = 0; k < rank_; ++k) {
        if (!c[k].is_zero()) out.add({k}, xi * yj * c[k]);
      }
    }
  }
  for (const auto& [jj, yj] : Y.coefficients()) out.add(jj, derivation(X, yj));
  for (const auto& [ii, xi] : X.coefficients()) out.add(ii, -derivation(Y, xi));
  return out;
}

GradedSection LieAlgebroid::d(const RationalFunction& f) const {
  GradedSection out(rank_, 1, form_host());
  for (std::size_t i = 0; i < rank_; ++i) out.add({i}, derivation(i, f));
  return out;
}

GradedSection LieAlgebroid::d(const GradedSection& omega) const {
  const Host host = expect(omega, form_host());
  const std::size_t k = omega.degree();
  GradedSection out(rank_, k + 1, host);
  if (omega.is_zero()) return out;
  for (const IndexTuple& J : increasing_tuples(rank_, k + 1)) {
    RationalFunction total;
    for (std::size_t s = 0; s <= k; ++s) {
      IndexTuple rest;
      for (std::size_t q = 0; q <= k; ++q) {
        if (q != s) rest.push_back(J[q]);
      }
      const RationalFunction term = derivation(J[s], omega.coefficient(rest));
      if (s % 2 == 0) total += term;
      else total -= term;
    }
    for (std::size_t s = 0; s <= k; ++s) {
      for (std::size_t t = s + 1; t <= k; ++t) {
        const RFVector& c = structure_[J[s]][J[t]];
        IndexTuple args(1);
        for (std::size_t q = 0; q <= k; ++q) {
          if (q != s && q != t) args.push_back(J[q]);
        }
        RationalFunction term;
        for (std::size_t m = 0; m < rank_; ++m) {
          if (c[m].is_zero()) continue;
          args[0] = m;
          const RationalFunction w = omega.coefficient(args);
          if (!w.is_zero()) term += c[m] * w;
        }
        if ((s + t) % 2 == 0) total += term;
        else total -= term;
      }
    }
    out.add(J, total);
  }
  return out;
}

GradedSection LieAlgebroid::interior(const GradedSection& X, const GradedSection& omega) const {
  expect(X, vector_host());
  const Host host = expect(omega, form_host());
  return contract(X, omega).with_host(host);
}

GradedSection LieAlgebroid::lie_derivative(const GradedSection& X, const GradedSection& omega) const {
  const Host host = expect(omega, form_host());
  expect(X, vector_host());
  if (omega.degree() == 0) return GradedSection::function(rank_, derivation(X, omega.value()), host);
  GradedSection out = interior(X, d(omega));
  out += d(interior(X, omega));
  return out.with_host(host);
}

GradedSection LieAlgebroid::wedge_with_function(const IndexTuple& I, const RationalFunction& g) const {
  // [e_I, g] = sum_s (-1)^{p-s} (a(e_{i_s}) g) e_{I \ s}, s counted from 1.
  const std::size_t p = I.size();
  GradedSection out(rank_, p == 0 ? 0 : p - 1);
  if (p == 0 || g.is_constant()) return out;
  for (std::size_t s = 0; s < p; ++s) {
    RationalFunction ag = derivation(I[s], g);
    if (ag.is_zero()) continue;
    IndexTuple rest;
    for (std::size_t q = 0; q < p; ++q) {
      if (q != s) rest.push_back(I[q]);
    }
    if ((p - (s + 1)) % 2 == 1) ag = -ag;
    out.add(rest, ag);
  }
  return out;
}

GradedSection LieAlgebroid::wedge_with_wedge(const IndexTuple& I, const IndexTuple& J) const {
  // [e_I, e_J] = sum_{s,t} (-1)^{s+t} [e_{i_s}, e_{j_t}] ^ e_{I \ s} ^ e_{J \ t}.
  const std::size_t p = I.size();
  const std::size_t q = J.size();
  GradedSection out(rank_, p + q == 0 ? 0 : p + q - 1);
  if (p == 0 || q == 0) return out;
  for (std::size_t s = 0; s < p; ++s) {
    for (std::size_t t = 0; t < q; ++t) {
      const RFVector& c = structure_[I[s]][J[t]];
      IndexTuple tail;
      for (std::size_t a = 0; a < p; ++a) {
        if (a != s) tail.push_back(I[a]);
      }
      for (std::size_t b = 0; b < q; ++b) {
        if (b != t) tail.push_back(J[b]);
      }
      const bool negate = (s + t) % 2 == 1;
      IndexTuple full(1);
      full.insert(full.end(), tail.begin(), tail.end());
      for (std::size_t m = 0; m < rank_; ++m) {
        if (c[m].is_zero()) continue;
        full[0] = m;
        out.add(full, negate ? -c[m] : c[m]);
      }
    }
  }
  return out;
}

GradedSection LieAlgebroid::schouten(const GradedSection& P, const GradedSection& Q) const {
  const Host host = common_host(expect(P, vector_host()), expect(Q, vector_host()));
  const std::size_t p = P.degree();
  const std::size_t q = Q.degree();
  if (p + q == 0) return GradedSection(rank_, 0, host);
  GradedSection out(rank_, p + q - 1, host);
  // [fA, gB] = f [A,g] ^ B + f g [A,B] - (-1)^{(p-1)(q-1)} g [B,f] ^ A.
  // (p-1)(q-1) is odd exactly when both degrees are even.
  const bool odd = p % 2 == 0 && q % 2 == 0;
  for (const auto& [I, f] : P.coefficients()) {
    for (const auto& [J, g] : Q.coefficients()) {
      const GradedSection eJ = GradedSection::basis(rank_, J);
      const GradedSection eI = GradedSection::basis(rank_, I);
      if (p > 0) out += wedge(wedge_with_function(I, g), eJ).scaled(f);
      if (p > 0 && q > 0) out += wedge_with_wedge(I, J).scaled(f * g);
      if (q > 0) {
        const GradedSection third = wedge(wedge_with_function(J, f), eI).scaled(g);
        if (odd) out += third;
        else out -= third;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- checks

CheckReport check_lie_algebroid(const LieAlgebroid& A) {
  CheckReport report;
  report.title = "lie-algebroid " + A.name();
  Clause& jacobi = report.add_clause("jacobi", "[[e_i,e_j],e_k] + cyclic = 0 on frame triples");
  const std::size_t r = A.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = j + 1; k < r; ++k) {
        const auto e = [&](std::size_t a) { return A.frame(a); };
        GradedSection sum = A.bracket(A.bracket(e(i), e(j)), e(k));
        sum += A.bracket(A.bracket(e(j), e(k)), e(i));
        sum += A.bracket(A.bracket(e(k), e(i)), e(j));
        jacobi.record(frame_label("e", {i, j, k}), sum, "e");
      }
    }
  }
  Clause& anchor = report.add_clause("anchor", "a[e_i,e_j] f = a(e_i)a(e_j) f - a(e_j)a(e_i) f for formal f");
  const RationalFunction f(formal_function("f"));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const RationalFunction lhs = A.derivation(A.bracket(A.frame(i), A.frame(j)), f);
      const RationalFunction rhs = A.derivation(i, A.derivation(j, f)) - A.derivation(j, A.derivation(i, f));
      anchor.record(frame_label("e", {i, j}), lhs - rhs);
    }
  }
  return report;
}

CheckReport check_subalgebroid(const LieAlgebroid& A, const std::vector<GradedSection>& S) {
  CheckReport report;
  report.title = "subalgebroid of " + A.name();
  Clause& closure = report.add_clause("closure", "[S_i, S_j] lies in span(S)");
  std::vector<RFVector> spanning;
  for (const auto& s : S) spanning.push_back(s.components());
  if (!spanning.empty() && rank(RFMatrix(spanning.begin(), spanning.end())) < spanning.size()) {
    throw RankDeficient("subbundle spanning set is generically dependent");
  }
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      const GradedSection b = A.bracket(S[i], S[j]);
      if (b.is_zero()) continue;
      if (!solve_in_span(b.components(), spanning)) {
        closure.record("[S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + "]", b, "e");
      }
    }
  }
  return report;
}

CheckReport check_morphism_to_algebra(const AlgebroidMorphismToAlgebra& m) {
  const LieAlgebroid& A = m.source;
  const LieAlgebroid& g = m.target;
  if (g.base_dim() != 0) throw ShapeError("morphism target must be a Lie algebra (base dimension 0)");
  if (m.phi.size() != A.rank()) throw ShapeError("phi needs one row per source frame element");
  for (const auto& row : m.phi) {
    if (row.size() != g.rank()) throw ShapeError("phi row length must equal the algebra dimension");
  }
  CheckReport report;
  report.title = "morphism " + A.name() + " -> " + g.name();
  Clause& clause = report.add_clause("morphism", "phi[X,Y] = a(X)(phi Y) - a(Y)(phi X) + [phi X, phi Y]");
  const auto phi_of = [&](const GradedSection& X) {
    GradedSection out(g.rank(), 1);
    for (const auto& [idx, c] : X.coefficients()) {
      for (std::size_t k = 0; k < g.rank(); ++k) out.add({k}, c * m.phi[idx[0]][k]);
    }
    return out;
  };
  const auto derive = [&](std::size_t i, const GradedSection& v) {
    GradedSection out(g.rank(), 1);
    for (const auto& [idx, c] : v.coefficients()) out.add(idx, A.derivation(i, c));
    return out;
  };
  for (std::size_t i = 0; i < A.rank(); ++i) {
    for (std::size_t j = i + 1; j < A.rank(); ++j) {
      const GradedSection pi = phi_of(A.frame(i));
      const GradedSection pj = phi_of(A.frame(j));
      GradedSection residual = phi_of(A.bracket(A.frame(i), A.frame(j)));
      residual -= derive(i, pj);
      residual += derive(j, pi);
      // Pointwise algebra bracket: the algebra has no base, so no derivative terms.
      residual -= g.bracket(pi, pj);
      clause.record(frame_label("e", {i, j}), residual, "g");
    }
  }
  return report;
}

}  // namespace courant
