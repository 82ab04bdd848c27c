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

// Structure-constant oracles for Lie algebras over a point, written from the
// textbook formulas and independent of the algebroid code.

#include "courant/double_structure.hpp"

namespace courant::testing {

/// Jacobi identity sum_m c^m_ab c^n_mc + cyclic = 0 for a Lie algebra.
inline bool jacobi_holds(const LieAlgebroid& g) {
  const std::size_t r = g.rank();
  const auto c = [&](std::size_t a, std::size_t b, std::size_t k) { return g.structure(a, b)[k]; };
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t d = 0; d < r; ++d) {
        for (std::size_t n = 0; n < r; ++n) {
          RationalFunction sum;
          for (std::size_t m = 0; m < r; ++m) {
            sum += c(a, b, m) * c(m, d, n) + c(b, d, m) * c(m, a, n) + c(d, a, m) * c(m, b, n);
          }
          if (!sum.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

/// Cocycle defect delta[e_a,e_b] - ad_a delta(e_b) + ad_b delta(e_a) of the
/// cobracket dual to the bracket on g*, from structure constants alone.
inline bool is_lie_bialgebra(const DoubleStructure& D) {
  const std::size_t r = D.rank();
  const auto c = [&](std::size_t a, std::size_t b, std::size_t k) { return D.A().structure(a, b)[k]; };
  const auto cs = [&](std::size_t i, std::size_t j, std::size_t k) { return D.Astar().structure(i, j)[k]; };
  // delta(e_k)^{ij} = <[eps_i, eps_j], e_k>
  const auto delta = [&](std::size_t k, std::size_t i, std::size_t j) { return cs(i, j, k); };
  const auto ad_delta = [&](std::size_t a, std::size_t b, std::size_t m, std::size_t n) {
    RationalFunction out;
    for (std::size_t i = 0; i < r; ++i) out += c(a, i, m) * delta(b, i, n) + c(a, i, n) * delta(b, m, i);
    return out;
  };
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t m = 0; m < r; ++m) {
        for (std::size_t n = 0; n < r; ++n) {
          RationalFunction defect;
          for (std::size_t k = 0; k < r; ++k) defect += c(a, b, k) * delta(k, m, n);
          defect -= ad_delta(a, b, m, n);
          defect += ad_delta(b, a, m, n);
          if (!defect.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace courant::testing
