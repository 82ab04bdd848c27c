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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace courant {

/// Maximum number of base coordinates. Jet multi-indices pack one 4-bit
/// derivative count per coordinate into a 64-bit word.
inline constexpr std::size_t kMaxBaseDim = 16;
inline constexpr unsigned kMaxJetOrderPerCoordinate = 15;

enum class IndeterminateKind : std::uint8_t { Coordinate = 0, Parameter = 1, Jet = 2 };

/// One indeterminate of the coefficient ring.
///
/// The declaration order of the fields is the global variable numbering used
/// by the monomial order: coordinates, then parameters, then jets ordered by
/// (function symbol, multi-index). `id` is the coordinate index for
/// coordinates and the interned symbol id otherwise. `jet` holds the
/// derivative count of coordinate k in bits [4k, 4k+4); two jets that differ
/// only by a permutation of the multi-index are therefore the same value.
struct Indeterminate {
  IndeterminateKind kind = IndeterminateKind::Coordinate;
  std::uint32_t id = 0;
  std::uint64_t jet = 0;

  friend auto operator<=>(const Indeterminate&, const Indeterminate&) = default;

  static Indeterminate coordinate(std::size_t index);
  static Indeterminate parameter(const std::string& name);
  static Indeterminate function(const std::string& name);

  /// Derivative count of coordinate `k` in a jet multi-index.
  unsigned jet_order(std::size_t k) const noexcept {
    return static_cast<unsigned>((jet >> (4 * k)) & 0xF);
  }
  unsigned total_jet_order() const noexcept;
  /// The jet f_{,alpha i} obtained by one more derivative in coordinate `k`.
  Indeterminate differentiated(std::size_t k) const;

  /// Multi-index as a sorted list of coordinate indices, e.g. f_{,xxy} -> {0,0,1}.
  std::vector<std::size_t> multi_index() const;
};

/// Interning table for parameter and function-symbol names.
///
/// Ids are assigned in first-use order and are stable for the lifetime of the
/// process; a name is either a parameter or a function symbol, never both.
class SymbolTable {
 public:
  static std::uint32_t intern(const std::string& name, IndeterminateKind kind);
  static std::string name(std::uint32_t id);
  static IndeterminateKind kind(std::uint32_t id);
  static bool contains(const std::string& name);
};

}  // namespace courant
