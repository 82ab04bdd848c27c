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

#include <array>
#include <vector>

#include "courant/double_structure.hpp"

namespace courant {

using SectionTriple = std::array<DoubleSection, 3>;

/// All ordered frame triples of E, slot k carrying the formal multiplier f<k>.
std::vector<SectionTriple> frame_triples(const DoubleStructure& D);

/// Identities valid for any two Lie algebroids A, A* (no compatibility):
///  T-closed-form  T equals 1/2 {<[X1,X2],xi3> + <[xi1,xi2],X3> + a(X3)phi - a*(xi3)phi} + c.p.
///  T-skew         T changes sign under a transposition
///  T1             ([e1,e2],e3)_+ = T + 1/2 rho(e1)(e2,e3)_+ - 1/2 rho(e2)(e3,e1)_+
///  interior       i_X L_xi d eta = [xi, L_X eta] - L_{L_xi X} eta + [d<eta,X>, xi]
///                                  + d(a*(xi)<eta,X>) - d<[xi,eta],X>
///  minus-cyclic   ([e1,e2],e3)_- + c.p. = T + {a(X3)phi + 2a*(xi3)phi - <[xi1,xi2],X3>} + c.p.
/// where phi = (e1,e2)_- and the lemma arguments are X = X1, xi = xi2, eta = xi3.
CheckReport check_structure_identities(const DoubleStructure& D, const std::vector<SectionTriple>& triples);

/// Identities that hold once (A, A*) is a Lie bialgebroid:
///  leibniz        [e1, f e2] = f[e1,e2] + (rho(e1)f) e2 - (e1,e2)_+ D f
///  anchor         rho[e1,e2] = [rho e1, rho e2] on a formal function
///  mixed-anchor   [a(X), a*(xi)] = a*(L_X xi) - a(L_xi X) + a a*^T d<xi,X> on a formal function
///  invariance     rho(e)(h1,h2)_+ = ([e,h1] + D(e,h1)_+, h2)_+ + (h1, [e,h2] + D(e,h2)_+)_+
///  exchange       L_{d_* f} xi = -[df, xi] and L_{df} X = -[d_* f, X]
CheckReport check_bialgebroid_identities(const DoubleStructure& D, const std::vector<SectionTriple>& triples);

}  // namespace courant
