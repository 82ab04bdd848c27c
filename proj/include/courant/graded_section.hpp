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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "courant/rational_function.hpp"

namespace courant {

/// Strictly increasing 0-based frame indices.
using IndexTuple = std::vector<std::size_t>;

/// Identifies the exterior algebra a section belongs to: multivectors of
/// algebroid `id` (dual = false) or its forms (dual = true). id 0 is a
/// wildcard that combines with anything.
struct Host {
  std::uint64_t id = 0;
  bool dual = false;

  friend bool operator==(const Host&, const Host&) = default;
  bool is_wildcard() const noexcept { return id == 0; }
};

/// Throws HostMismatch unless the hosts are compatible; returns the more
/// specific of the two.
Host common_host(const Host& a, const Host& b);

/// Degree-k element of the exterior algebra over a rank-r frame with
/// rational-function coefficients, stored on increasing index tuples.
class GradedSection {
 public:
  GradedSection() = default;
  GradedSection(std::size_t rank, std::size_t degree, Host host = {});

  static GradedSection function(std::size_t rank, const RationalFunction& f, Host host = {});
  /// The wedge of frame elements in the given (any) order.
  static GradedSection basis(std::size_t rank, const IndexTuple& indices, Host host = {});
  /// Degree-1 section with the given component vector.
  static GradedSection vector(const std::vector<RationalFunction>& components, Host host = {});

  std::size_t rank() const noexcept { return rank_; }
  std::size_t degree() const noexcept { return degree_; }
  const Host& host() const noexcept { return host_; }
  GradedSection with_host(Host host) const;

  const std::map<IndexTuple, RationalFunction>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of e_{indices} for indices in any order (sign-adjusted;
  /// zero on repeats).
  RationalFunction coefficient(const IndexTuple& indices) const;
  /// Degree-0 value.
  RationalFunction value() const { return coefficient({}); }
  /// Component i of a degree-1 section.
  RationalFunction operator[](std::size_t i) const { return coefficient({i}); }
  std::vector<RationalFunction> components() const;

  /// Adds c * e_{indices}, indices in any order.
  void add(const IndexTuple& indices, const RationalFunction& c);

  GradedSection operator-() const;
  GradedSection& operator+=(const GradedSection& rhs);
  GradedSection& operator-=(const GradedSection& rhs);
  friend GradedSection operator+(GradedSection a, const GradedSection& b) { return a += b; }
  friend GradedSection operator-(GradedSection a, const GradedSection& b) { return a -= b; }
  GradedSection scaled(const RationalFunction& f) const;
  friend GradedSection operator*(const RationalFunction& f, const GradedSection& s) { return s.scaled(f); }

  friend bool operator==(const GradedSection& a, const GradedSection& b);

  /// Human-readable form such as `x*e1^e2 + e3`, using `symbol` for the frame.
  std::string to_string(const std::string& symbol, const NameContext& names = {}) const;

 private:
  void check_compatible(const GradedSection& other) const;

  std::size_t rank_ = 0;
  std::size_t degree_ = 0;
  Host host_;
  std::map<IndexTuple, RationalFunction> coeffs_;
};

/// Exterior product.
GradedSection wedge(const GradedSection& a, const GradedSection& b);

/// Contraction of a degree-1 element into the first slot of `s`:
/// (i_v s)(w2, ...) = s(v, w2, ...). The algebra is the same for a vector
/// into a form and a covector into a multivector; hosts are not checked.
GradedSection contract(const GradedSection& v, const GradedSection& s);

/// H#alpha for a degree-2 H, fixed by <beta, H#alpha> = H(alpha, beta). The
/// same rule gives I-flat for a 2-form I.
inline GradedSection sharp(const GradedSection& H, const GradedSection& alpha) { return contract(alpha, H); }

/// Natural pairing of a degree-1 form with a degree-1 vector.
RationalFunction pair(const GradedSection& a, const GradedSection& b);

/// Full evaluation s(v1, ..., vk) for degree-1 arguments.
RationalFunction evaluate(const GradedSection& s, const std::vector<GradedSection>& args);

/// Sign of the permutation that sorts `indices`, or 0 if an index repeats.
int sort_sign(IndexTuple& indices);

/// All increasing k-tuples from {0, ..., r-1}.
std::vector<IndexTuple> increasing_tuples(std::size_t r, std::size_t k);

}  // namespace courant
