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

// Test fixtures built by hand from their defining formulas, independently of
// the library constructors they are compared against.

#include <vector>

#include "courant/lie_algebroid.hpp"
#include "generators.hpp"

namespace courant::testing {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

inline GradedSection vec(const LieAlgebroid& A, const std::vector<RationalFunction>& c) {
  return GradedSection::vector(c, A.vector_host());
}

inline GradedSection form1(const LieAlgebroid& A, const std::vector<RationalFunction>& c) {
  return GradedSection::vector(c, A.form_host());
}

/// Bivector sum_{i<j} pi[i][j] e_i ^ e_j.
inline GradedSection bivector(std::size_t rank, const ScalarMatrix& pi, Host host = {}) {
  GradedSection out(rank, 2, host);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) out.add({i, j}, pi[i][j]);
  }
  return out;
}

/// Antisymmetric matrix from the entries above the diagonal.
inline ScalarMatrix skew(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& entries) {
  ScalarMatrix m(n, std::vector<Scalar>(n));
  for (const auto& [i, j, v] : entries) {
    m[i][j] = v;
    m[j][i] = -v;
  }
  return m;
}

/// z dx^dy + x dy^dz + y dz^dx on R^3.
inline ScalarMatrix linear_poisson() {
  return skew(3, {{0, 1, x(2)}, {1, 2, x(0)}, {2, 0, x(1)}});
}

/// Cotangent algebroid written out from its textbook formulas:
/// anchor(dx_i) = sum_j pi^{ij} d_j and [dx_i, dx_j] = d(pi^{ij}).
inline LieAlgebroid hand_cotangent(const ScalarMatrix& pi, const std::string& name = "Tstar") {
  const std::size_t n = pi.size();
  RFMatrix anchor = zero_matrix(n, n);
  auto table = LieAlgebroid::empty_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      anchor[i][j] = pi[i][j];
      for (std::size_t k = 0; k < n; ++k) table[i][j][k] = pi[i][j].differentiate(k);
    }
  }
  return LieAlgebroid(n, n, anchor, table, name);
}

/// 2-dim nonabelian algebra [e1, e2] = e2.
inline LieAlgebroid affine_algebra(const std::string& name = "aff") {
  auto t = LieAlgebroid::empty_table(2);
  t[0][1][1] = 1;
  t[1][0][1] = -1;
  return LieAlgebroid::lie_algebra(2, t, name);
}

/// 2-dim algebra [e1, e2] = e1 (a second, non-compatible dual structure).
inline LieAlgebroid other_affine_algebra(const std::string& name = "aff*") {
  auto t = LieAlgebroid::empty_table(2);
  t[0][1][0] = 1;
  t[1][0][0] = -1;
  return LieAlgebroid::lie_algebra(2, t, name);
}

/// so(3): [e1,e2] = e3 and cyclic.
inline LieAlgebroid so3(const std::string& name = "so3") {
  auto t = LieAlgebroid::empty_table(3);
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    t[i][j][k] = 1;
    t[j][i][k] = -1;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return LieAlgebroid::lie_algebra(3, t, name);
}

inline GradedSection random_section(Rng& rng, std::size_t rank, std::size_t degree, const ScalarShape& shape,
                                    Host host = {}) {
  GradedSection out(rank, degree, host);
  for (const auto& idx : increasing_tuples(rank, degree)) {
    if (uniform(rng, 0, 2) == 0) continue;
    out.add(idx, random_scalar(rng, shape));
  }
  return out;
}

}  // namespace courant::testing
