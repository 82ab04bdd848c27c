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

#include <vector>

#include "courant/poisson.hpp"
#include "courant/subbundle.hpp"

namespace courant {

/// H in the second exterior power of A, read as the map A* -> A, xi -> H#xi.
struct BivectorOperator {
  GradedSection H;
};

/// I in the second exterior power of A*, read as the map A -> A*, X -> I-flat X.
struct TwoFormOperator {
  GradedSection I;
};

/// Graph {H#eps^i + eps^i}.
SubbundleSpec graph_subbundle(const DoubleStructure& D, const BivectorOperator& op);
/// Graph {e_i + I-flat e_i}.
SubbundleSpec graph_subbundle(const DoubleStructure& D, const TwoFormOperator& op);

/// d_* H + 1/2 [H, H]. Throws HypothesisFailure unless (A, A*) is a Lie
/// bialgebroid.
GradedSection mc_residual_H(const DoubleStructure& D, const GradedSection& H);
/// d I + 1/2 [I, I]_*, the mirror image.
GradedSection mc_residual_I(const DoubleStructure& D, const GradedSection& I);

/// [xi, eta]_H = L_{H xi} eta - L_{H eta} xi + d <xi, H eta>.
GradedSection bracket_H(const DoubleStructure& D, const GradedSection& H, const GradedSection& xi,
                        const GradedSection& eta);

/// Maurer-Cartan residual as a one-clause report.
CheckReport is_hamiltonian(const DoubleStructure& D, const GradedSection& H);
/// Separate clauses for d_* H = 0 and [H, H] = 0.
CheckReport is_strong_hamiltonian(const DoubleStructure& D, const GradedSection& H);

/// A* with anchor a_* + a o H# and bracket [xi, eta] + [xi, eta]_H, on the
/// frame dual to A. Throws NotHamiltonian unless the Maurer-Cartan residual
/// vanishes.
LieAlgebroid induced_dual_algebroid(const DoubleStructure& D, const GradedSection& H);

/// Annihilator of span(h) among the 1-forms of A, from a rational-function
/// kernel. Throws RankDeficient when h is generically dependent.
std::vector<GradedSection> annihilator(const LieAlgebroid& A, const std::vector<GradedSection>& h);

/// h + h-perp is Dirac iff h and h-perp are subalgebroids of A and A*. Clauses
/// are prefixed "h." and "h-perp." plus an isotropy clause for (.,.)_-.
CheckReport null_dirac_check(const DoubleStructure& D, const std::vector<GradedSection>& h);

/// The subbundle h + h-perp of a null Dirac check.
SubbundleSpec null_subbundle(const DoubleStructure& D, const std::vector<GradedSection>& h);

/// Dspec is involutive and its annihilator closes in T*_pi.
CheckReport reduction_check(const PoissonTensor& pi, const std::vector<GradedSection>& Dspec);

/// The dual pair of a null Dirac structure D + D-perp for an invertible pi:
/// D-bar = pi#(D-perp) with annihilator (pi#)^{-1}(D). The spanning vectors of
/// D-bar are in reduced row echelon form. Throws SingularMatrix or
/// NotNullDirac.
SubbundleSpec dual_pair(const PoissonTensor& pi, const std::vector<GradedSection>& Dspec);

}  // namespace courant
