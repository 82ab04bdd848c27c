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

#include "courant/poisson.hpp"

#include "courant/errors.hpp"

namespace courant {

RFMatrix coefficient_matrix(const GradedSection& s) {
  if (s.degree() != 2) throw ShapeError("coefficient matrix needs a degree-2 section");
  const std::size_t n = s.rank();
  RFMatrix m = zero_matrix(n, n);
  for (const auto& [I, c] : s.coefficients()) {
    m[I[0]][I[1]] = c;
    m[I[1]][I[0]] = -c;
  }
  return m;
}

GradedSection from_coefficient_matrix(const RFMatrix& m, Host host) {
  const std::size_t n = m.size();
  GradedSection out(n, 2, host);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ShapeError("coefficient matrix must be square");
    if (!m[i][i].is_zero()) throw ShapeError("coefficient matrix must be antisymmetric");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != -m[j][i]) throw ShapeError("coefficient matrix must be antisymmetric");
      out.add({i, j}, m[i][j]);
    }
  }
  return out;
}

RFMatrix operator_matrix(const GradedSection& s) { return transpose(coefficient_matrix(s)); }

GradedSection from_operator_matrix(const RFMatrix& m, Host host) { return from_coefficient_matrix(transpose(m), host); }

CheckReport is_poisson(const GradedSection& W) {
  const LieAlgebroid T = LieAlgebroid::tangent(W.rank());
  CheckReport report;
  report.title = "poisson";
  Clause& clause = report.add_clause("jacobi", "[W, W] = 0");
  const GradedSection w = W.with_host(T.vector_host());
  clause.record("[W,W]", T.schouten(w, w), "d");
  return report;
}

PoissonTensor::PoissonTensor(const GradedSection& pi) : pi_(pi.with_host({})) {
  if (pi.degree() != 2) throw ShapeError("a Poisson tensor is a bivector");
  const CheckReport r = is_poisson(pi_);
  if (!r.passed()) {
    std::string msg = "bivector fails the Jacobi identity:";
    for (const auto& [label, value] : r.clauses.front().residuals.front().components) {
      msg += " " + label + ": " + value.to_string();
    }
    throw NotPoisson(msg);
  }
}

LieAlgebroid cotangent_algebroid(const PoissonTensor& pi, std::string name) {
  const std::size_t n = pi.base_dim();
  const LieAlgebroid T = LieAlgebroid::tangent(n);
  const GradedSection P = pi.bivector().with_host(T.vector_host());
  RFMatrix anchor;
  std::vector<GradedSection> images;
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(sharp(P, T.coframe(i)));
    anchor.push_back(images.back().components());
  }
  auto table = LieAlgebroid::empty_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      GradedSection b = T.lie_derivative(images[i], T.coframe(j));
      b -= T.lie_derivative(images[j], T.coframe(i));
      b -= T.d(P.coefficient({i, j}));
      table[i][j] = b.components();
      for (std::size_t k = 0; k < n; ++k) table[j][i][k] = -table[i][j][k];
    }
  }
  return LieAlgebroid(n, n, std::move(anchor), std::move(table), std::move(name));
}

DoubleStructure canonical_double(const PoissonTensor& pi) {
  return DoubleStructure(LieAlgebroid::tangent(pi.base_dim()), cotangent_algebroid(pi));
}

GradedSection induced_poisson(const DoubleStructure& D) {
  const std::size_t n = D.base_dim();
  RFMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < D.rank(); ++i) {
    const RFVector& a = D.A().anchor()[i];
    const RFVector& as = D.Astar().anchor()[i];
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k].is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) m[k][l] += a[k] * as[l];
    }
  }
  return from_coefficient_matrix(m);
}

PoissonTensor compose_plus(const PoissonTensor& U, const PoissonTensor& V) {
  const RFMatrix u = U.matrix();
  const RFMatrix v = V.matrix();
  return PoissonTensor::from_matrix(u * invert_matrix(u + v) * v);
}

MinusComposition compose_minus(const PoissonTensor& U, const PoissonTensor& V) {
  const RFMatrix u = U.matrix();
  const RFMatrix v = V.matrix();
  const RFMatrix w_inverse = invert_matrix(u - v);
  // (U-V)(dx^i, eta_j) = delta_ij for eta_j = sum_k M[j][k] dx^k.
  const RFMatrix M = transpose(w_inverse);
  DoubleStructure pair(cotangent_algebroid(U, "T*U"), cotangent_algebroid(V, "T*V").reframed(M, "T*V"));
  const GradedSection induced = from_coefficient_matrix(scaled(u * w_inverse * v, RationalFunction(-2)));
  return {std::move(pair), induced};
}

GradedSection hamiltonian_2form_residual(const PoissonTensor& pi, const GradedSection& omega) {
  const LieAlgebroid T = LieAlgebroid::tangent(pi.base_dim());
  const LieAlgebroid C = cotangent_algebroid(pi).as_dual_of(T);
  const GradedSection w = omega.with_host(T.form_host());
  return T.d(w) + C.schouten(w, w).scaled(RationalFunction(Rational(1, 2)));
}

NijenhuisData nijenhuis_tensor(const PoissonTensor& pi, const GradedSection& omega) {
  const RFMatrix P = operator_matrix(pi.bivector());
  const RFMatrix N = P * operator_matrix(omega);
  const RFMatrix NP = N * P;
  NijenhuisData out;
  out.N = N;
  out.omega = omega;
  out.pi = pi.bivector();
  out.N_pi = from_operator_matrix(NP);
  out.induced = from_operator_matrix(scaled(P + NP, RationalFunction(-2)));
  const LieAlgebroid T = LieAlgebroid::tangent(pi.base_dim());
  const LieAlgebroid C = cotangent_algebroid(pi).as_dual_of(T);
  const GradedSection w = omega.with_host(T.form_host());
  out.complementary = C.schouten(w, w).is_zero();
  out.strong_hamiltonian = out.complementary && T.d(w).is_zero();
  return out;
}

}  // namespace courant
