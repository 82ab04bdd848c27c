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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "courant/check_report.hpp"
#include "courant/graded_section.hpp"
#include "courant/linear_algebra.hpp"

namespace courant {

/// Lie algebroid on a trivial bundle over R^n with a global frame e_1..e_r.
///
/// The anchor is an r x n matrix whose row i holds the components of a(e_i);
/// the structure table gives [e_i, e_j] = sum_k c^k_ij e_k. Copies share an
/// id, which tags the sections they produce.
class LieAlgebroid {
 public:
  using StructureTable = std::vector<std::vector<RFVector>>;

  /// `structure[i][j]` must be antisymmetric in (i, j); throws ShapeError
  /// otherwise or on inconsistent sizes.
  LieAlgebroid(std::size_t base_dim, std::size_t rank, RFMatrix anchor, StructureTable structure,
               std::string name = {});

  /// Tangent bundle of R^n with the coordinate frame.
  static LieAlgebroid tangent(std::size_t n, std::string name = "T");
  /// Zero anchor and zero bracket.
  static LieAlgebroid trivial(std::size_t n, std::size_t rank, std::string name = "0");
  /// Lie algebra over a point from its structure constants.
  static LieAlgebroid lie_algebra(std::size_t rank, StructureTable structure, std::string name = "g");
  /// Empty structure table of the right shape, for building by hand.
  static StructureTable empty_table(std::size_t rank);

  std::size_t base_dim() const noexcept { return base_dim_; }
  std::size_t rank() const noexcept { return rank_; }
  std::uint64_t id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  const RFMatrix& anchor() const noexcept { return anchor_; }
  const StructureTable& structure() const noexcept { return structure_; }
  const RFVector& structure(std::size_t i, std::size_t j) const { return structure_.at(i).at(j); }

  /// Same data with a fresh identity.
  LieAlgebroid renamed(std::string name) const;
  /// Same algebroid, declared to live on the dual bundle of `other`: its
  /// sections are `other`'s forms and vice versa.
  LieAlgebroid as_dual_of(const LieAlgebroid& other) const;
  /// The same algebroid written in the frame f_i = sum_k M[i][k] e_k, with a
  /// fresh identity. Throws SingularMatrix when M is not invertible.
  LieAlgebroid reframed(const RFMatrix& M, std::string name) const;

  Host vector_host() const noexcept { return host_; }
  Host form_host() const noexcept { return {host_.id, !host_.dual}; }
  GradedSection frame(std::size_t i) const;
  GradedSection coframe(std::size_t i) const;
  GradedSection zero_vector() const { return GradedSection(rank_, 1, vector_host()); }
  GradedSection zero_form(std::size_t degree) const { return GradedSection(rank_, degree, form_host()); }

  /// a(e_i) f.
  RationalFunction derivation(std::size_t i, const RationalFunction& f) const;
  /// a(X) f for a degree-1 section X.
  RationalFunction derivation(const GradedSection& X, const RationalFunction& f) const;
  /// Components of the vector field a(X) on the base.
  RFVector anchor_image(const GradedSection& X) const;

  /// Bracket of degree-1 sections, extended from the frame by Leibniz.
  GradedSection bracket(const GradedSection& X, const GradedSection& Y) const;
  /// Cartan differential on forms.
  GradedSection d(const GradedSection& omega) const;
  /// d of a function, as a 1-form.
  GradedSection d(const RationalFunction& f) const;
  /// Contraction i_X omega into the first slot.
  GradedSection interior(const GradedSection& X, const GradedSection& omega) const;
  /// L_X omega = i_X d omega + d i_X omega on forms (a(X)f in degree 0).
  GradedSection lie_derivative(const GradedSection& X, const GradedSection& omega) const;
  /// Schouten bracket of multivectors.
  GradedSection schouten(const GradedSection& P, const GradedSection& Q) const;

 private:
  Host expect(const GradedSection& s, Host host) const;
  GradedSection frame_bracket(std::size_t i, std::size_t j) const;
  /// [e_I, g] for a frame wedge and a function.
  GradedSection wedge_with_function(const IndexTuple& I, const RationalFunction& g) const;
  /// [e_I, e_J] for frame wedges.
  GradedSection wedge_with_wedge(const IndexTuple& I, const IndexTuple& J) const;

  std::size_t base_dim_;
  std::size_t rank_;
  RFMatrix anchor_;
  StructureTable structure_;
  std::string name_;
  std::uint64_t id_;
  Host host_;
};

/// Jacobi identity on frame triples and the anchor-morphism identity
/// evaluated on a formal function.
CheckReport check_lie_algebroid(const LieAlgebroid& A);

/// Closure of span(S) under the bracket. Throws RankDeficient when S is
/// generically dependent.
CheckReport check_subalgebroid(const LieAlgebroid& A, const std::vector<GradedSection>& S);

/// Morphism from an algebroid to a Lie algebra: phi[i][k] is the k-th
/// algebra component of phi(e_i).
struct AlgebroidMorphismToAlgebra {
  LieAlgebroid source;
  LieAlgebroid target;
  RFMatrix phi;
};

/// phi[X,Y] = a(X)(phi Y) - a(Y)(phi X) + [phi X, phi Y] on frame pairs.
CheckReport check_morphism_to_algebra(const AlgebroidMorphismToAlgebra& m);

/// Formal function symbols reserved for checks; user models cannot declare
/// names starting with an underscore.
Scalar formal_function(const std::string& name);

}  // namespace courant
