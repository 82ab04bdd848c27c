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

#include <string>
#include <vector>

#include "courant/check_report.hpp"
#include "courant/lie_algebroid.hpp"

namespace courant {

/// Section X + xi of E = A + A*: X a degree-1 section of A, xi a 1-form of A.
struct DoubleSection {
  GradedSection X;
  GradedSection xi;

  DoubleSection operator-() const { return {-X, -xi}; }
  DoubleSection& operator+=(const DoubleSection& rhs);
  DoubleSection& operator-=(const DoubleSection& rhs);
  friend DoubleSection operator+(DoubleSection a, const DoubleSection& b) { return a += b; }
  friend DoubleSection operator-(DoubleSection a, const DoubleSection& b) { return a -= b; }
  DoubleSection scaled(const RationalFunction& f) const { return {X.scaled(f), xi.scaled(f)}; }
  friend DoubleSection operator*(const RationalFunction& f, const DoubleSection& e) { return e.scaled(f); }
  friend bool operator==(const DoubleSection& a, const DoubleSection& b) { return a.X == b.X && a.xi == b.xi; }
  bool is_zero() const { return X.is_zero() && xi.is_zero(); }
};

enum class Sign { Plus, Minus };

/// The pair (A, A*) with A* read on the dual frame, and the bracket, anchor
/// and pairings of their direct sum. No compatibility is assumed.
class DoubleStructure {
 public:
  /// Throws ShapeError unless rank and base dimension agree.
  DoubleStructure(const LieAlgebroid& A, const LieAlgebroid& Astar);

  const LieAlgebroid& A() const noexcept { return A_; }
  const LieAlgebroid& Astar() const noexcept { return Astar_; }
  std::size_t rank() const noexcept { return A_.rank(); }
  std::size_t base_dim() const noexcept { return A_.base_dim(); }

  /// The pair (A*, A); sections map by swapping their parts.
  DoubleStructure flip() const;

  DoubleSection zero() const;
  /// X + 0 and 0 + xi.
  DoubleSection from_vector(const GradedSection& X) const;
  DoubleSection from_form(const GradedSection& xi) const;
  DoubleSection from_components(const std::vector<RationalFunction>& X, const std::vector<RationalFunction>& xi) const;
  /// Frame of E: e_1..e_r followed by eps^1..eps^r.
  DoubleSection frame(std::size_t i) const;
  std::size_t frame_size() const noexcept { return 2 * rank(); }
  std::string frame_name(std::size_t i) const;

  /// (e1, e2)_{+/-} = 1/2 (<xi1, X2> +/- <xi2, X1>).
  RationalFunction pairing(const DoubleSection& e1, const DoubleSection& e2, Sign sign) const;
  /// The double bracket.
  DoubleSection bracket(const DoubleSection& e1, const DoubleSection& e2) const;
  /// rho(e) = a(X) + a*(xi) as a vector field on the base.
  RFVector rho(const DoubleSection& e) const;
  /// rho(e) f.
  RationalFunction rho_apply(const DoubleSection& e, const RationalFunction& f) const;
  /// D f = d_* f + d f.
  DoubleSection script_D(const RationalFunction& f) const;
  /// T from its definition: 1/3 ([e1,e2], e3)_+ + cyclic.
  RationalFunction T(const DoubleSection& e1, const DoubleSection& e2, const DoubleSection& e3) const;
  /// T from the closed form in terms of the constituent brackets.
  RationalFunction T_closed_form(const DoubleSection& e1, const DoubleSection& e2, const DoubleSection& e3) const;
  /// [e, h] + D (e, h)_+.
  DoubleSection twisted_bracket(const DoubleSection& e, const DoubleSection& h) const;

  /// Swaps the parts of a section, for use with flip().
  static DoubleSection flip(const DoubleSection& e) { return {e.xi, e.X}; }

 private:
  LieAlgebroid A_;
  LieAlgebroid Astar_;
};

/// The five Courant algebroid axioms for (bracket, rho, (.,.)_+), checked on
/// frame sections carrying formal multipliers.
CheckReport check_courant_axioms(const DoubleStructure& D);

/// Parts of the Jacobiator decomposition J = DT - (J1 + J2 + c.p.).
struct AnomalyReport {
  DoubleSection J;
  DoubleSection DT;
  DoubleSection J1_cp;
  DoubleSection J2_cp;
  /// J - DT + (J1_cp + J2_cp).
  DoubleSection residual;
  /// The same with the A-part of J2_cp negated, which is what the A <-> A*
  /// symmetry of the bracket forces; this one vanishes for every pair.
  DoubleSection mirrored_residual;
};

/// Throws HypothesisFailure unless both constituents are Lie algebroids.
AnomalyReport jacobi_anomaly(const DoubleStructure& D, const DoubleSection& e1, const DoubleSection& e2,
                             const DoubleSection& e3);

/// The hypothesis shared by the anomaly and compatibility checks.
void require_algebroids(const DoubleStructure& D);

/// d_* is a derivation of the bracket on A: d_*[X,Y] - L_X d_*Y + L_Y d_*X = 0
/// for frame sections with formal multipliers. Throws HypothesisFailure
/// unless both constituents are Lie algebroids.
CheckReport check_bialgebroid(const DoubleStructure& D);

}  // namespace courant
