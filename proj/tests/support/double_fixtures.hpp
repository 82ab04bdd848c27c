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
#include "fixtures.hpp"

namespace courant::testing {

/// (TR^n, T*R^n) with zero structure on the cotangent side.
inline DoubleStructure standard_double(std::size_t n) {
  return DoubleStructure(LieAlgebroid::tangent(n, "T"), LieAlgebroid::trivial(n, n, "T*0"));
}

/// (TR^n, T*R^n_pi) with the cotangent side written out by hand.
inline DoubleStructure poisson_double(const ScalarMatrix& pi) {
  return DoubleStructure(LieAlgebroid::tangent(pi.size(), "T"), hand_cotangent(pi, "T*pi"));
}

/// Lie algebra g with the abelian dual: a Lie bialgebra.
inline DoubleStructure manin_double(const LieAlgebroid& g) {
  return DoubleStructure(g, LieAlgebroid::lie_algebra(g.rank(), LieAlgebroid::empty_table(g.rank()), "ab"));
}

inline DoubleSection random_double_section(Rng& rng, const DoubleStructure& D, const ScalarShape& shape) {
  std::vector<RationalFunction> X(D.rank());
  std::vector<RationalFunction> xi(D.rank());
  for (auto& c : X) c = random_scalar(rng, shape);
  for (auto& c : xi) c = random_scalar(rng, shape);
  return D.from_components(X, xi);
}

}  // namespace courant::testing
