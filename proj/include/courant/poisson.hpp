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

#include "courant/double_structure.hpp"

namespace courant {

/// Full antisymmetric coefficient matrix m[i][j] = s(e^i, e^j) of a degree-2
/// section.
RFMatrix coefficient_matrix(const GradedSection& s);
/// Degree-2 section with the given antisymmetric coefficient matrix. Throws
/// ShapeError if the matrix is not antisymmetric.
GradedSection from_coefficient_matrix(const RFMatrix& m, Host host = {});

/// [W, W] for a bivector field W on R^n; pass iff it vanishes.
CheckReport is_poisson(const GradedSection& W);

/// Bivector field on R^n with [pi, pi] = 0, checked on construction.
class PoissonTensor {
 public:
  /// Throws NotPoisson with the Schouten square in the message.
  explicit PoissonTensor(const GradedSection& pi);
  static PoissonTensor from_matrix(const RFMatrix& m) { return PoissonTensor(from_coefficient_matrix(m)); }

  std::size_t base_dim() const noexcept { return pi_.rank(); }
  const GradedSection& bivector() const noexcept { return pi_; }
  RFMatrix matrix() const { return coefficient_matrix(pi_); }

 private:
  GradedSection pi_;
};

/// T*R^n with anchor pi# and [alpha, beta] = L_{pi# alpha} beta - L_{pi# beta} alpha - d pi(alpha, beta).
LieAlgebroid cotangent_algebroid(const PoissonTensor& pi, std::string name = "T*pi");

/// The canonical pair (TR^n, T*R^n_pi).
DoubleStructure canonical_double(const PoissonTensor& pi);

/// Base bivector pi(alpha, beta) = <beta, a_*(a^T alpha)> of a pair; for
/// (TR^n, T*R^n_pi) it is pi itself.
GradedSection induced_poisson(const DoubleStructure& D);

/// U (U+V)^{-1} V. Throws SingularMatrix when U+V is degenerate and NotPoisson
/// if the result fails the Jacobi identity.
PoissonTensor compose_plus(const PoissonTensor& U, const PoissonTensor& V);

struct MinusComposition {
  /// (T*_U, T*_V) with T*_V written in the frame dual to dx^i under
  /// (xi, eta) = (U-V)(xi, eta).
  DoubleStructure pair;
  /// -2 U (U-V)^{-1} V.
  GradedSection induced;
};

/// Throws SingularMatrix when U-V is degenerate.
MinusComposition compose_minus(const PoissonTensor& U, const PoissonTensor& V);

/// d omega + 1/2 [omega, omega]_pi with the Schouten bracket of T*_pi.
GradedSection hamiltonian_2form_residual(const PoissonTensor& pi, const GradedSection& omega);

struct NijenhuisData {
  /// N = pi# omega-flat as an operator on vector components.
  RFMatrix N;
  GradedSection omega;
  GradedSection pi;
  /// The bivector with operator N pi#.
  GradedSection N_pi;
  /// The bivector with operator -2 (pi# + N pi#).
  GradedSection induced;
  /// [omega, omega]_pi = 0.
  bool complementary = false;
  /// d omega = 0 as well: omega is strong hamiltonian for (T*_pi, T).
  bool strong_hamiltonian = false;
};

NijenhuisData nijenhuis_tensor(const PoissonTensor& pi, const GradedSection& omega);

/// Matrix of the map alpha -> H#alpha on covector components, and of
/// X -> I-flat X on vector components.
RFMatrix operator_matrix(const GradedSection& s);
/// Inverse of operator_matrix.
GradedSection from_operator_matrix(const RFMatrix& m, Host host = {});

}  // namespace courant
