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

#include <optional>
#include <vector>

#include "courant/double_structure.hpp"

namespace courant {

/// A subbundle of E = A + A* given by spanning sections of generic constant
/// rank.
class SubbundleSpec {
 public:
  /// Throws RankDeficient unless the spanning sections have generic rank
  /// `expected_rank`.
  SubbundleSpec(DoubleStructure host, std::vector<DoubleSection> spanning, std::size_t expected_rank);
  /// Rank taken from the spanning list, which must be independent.
  SubbundleSpec(DoubleStructure host, std::vector<DoubleSection> spanning);

  const DoubleStructure& host() const noexcept { return host_; }
  const std::vector<DoubleSection>& spanning() const noexcept { return spanning_; }
  std::size_t rank() const noexcept { return spanning_.size(); }

  /// Components (X, xi) of each spanning section as rows of length 2r.
  std::vector<RFVector> rows() const;
  /// Coefficients of `e` in the spanning sections, or nullopt if e is not in
  /// the span.
  std::optional<RFVector> coordinates(const DoubleSection& e) const;

 private:
  DoubleStructure host_;
  std::vector<DoubleSection> spanning_;
};

/// Components (X, xi) of a double section as one vector of length 2r.
RFVector flatten(const DoubleSection& e);

/// True when the pairing vanishes on all pairs of spanning sections.
bool is_isotropic(const SubbundleSpec& L, Sign sign = Sign::Plus);

/// Closure of span(L) under the double bracket. Throws NotIsotropic when L is
/// not isotropic for (.,.)_+.
CheckReport integrability_oracle(const SubbundleSpec& L);

/// Lie bialgebroid carried by transverse Dirac subbundles L1, L2: L1 keeps
/// its spanning frame, L2 gets the frame dual to it under <xi, X> = 2(xi, X)_+.
/// Throws NotTransverse, NotIsotropic or NotIntegrable.
DoubleStructure recover_bialgebroid(const DoubleStructure& D, const SubbundleSpec& L1, const SubbundleSpec& L2);

}  // namespace courant
