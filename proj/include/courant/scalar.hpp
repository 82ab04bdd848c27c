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
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "courant/indeterminate.hpp"
#include "courant/rational.hpp"

namespace courant {

/// Power product of indeterminates, factors sorted by variable numbering.
class Monomial {
 public:
  using Factor = std::pair<Indeterminate, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Indeterminate v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t exponent(const Indeterminate& v) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const noexcept;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  /// Removes every power of `v`.
  Monomial without(const Indeterminate& v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Graded lexicographic order: total degree first, then the exponent of the
  /// lowest-numbered variable where the two differ.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Printing context: names for base coordinates. Parameters and function
/// symbols carry their own interned names.
struct NameContext {
  std::vector<std::string> coordinates;
  std::string coordinate_name(std::size_t index) const;
};

/// Multivariate polynomial over the rationals in base coordinates, formal
/// parameters, and jets of formal function symbols.
///
/// Terms are kept sorted in decreasing monomial order with no zero
/// coefficients, so structural equality is equality of polynomials.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : Scalar(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(Rational(value)) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);                   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& coefficient, Monomial monomial);

  static Scalar variable(Indeterminate v);
  static Scalar coordinate(std::size_t index) { return variable(Indeterminate::coordinate(index)); }
  static Scalar parameter(const std::string& name) { return variable(Indeterminate::parameter(name)); }
  /// The formal function symbol itself (empty multi-index).
  static Scalar function(const std::string& name) { return variable(Indeterminate::function(name)); }
  /// Builds from arbitrary terms; sorts, merges and drops zeros.
  static Scalar from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Constant term value; only meaningful when is_constant().
  Rational constant_value() const;
  std::size_t size() const noexcept { return terms_.size(); }

  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coefficient; }
  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(const Indeterminate& v) const noexcept;
  std::set<Indeterminate> variables() const;

  /// Coefficients c_k with this = sum_k c_k v^k; c_k is free of `v`.
  std::vector<Scalar> coefficients_in(const Indeterminate& v) const;
  static Scalar from_coefficients(const std::vector<Scalar>& coeffs, const Indeterminate& v);

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar scaled(const Rational& factor) const;
  Scalar pow(unsigned exponent) const;

  /// Makes the leading coefficient 1 (zero stays zero).
  Scalar monic() const;

  /// Exact quotient; throws if `divisor` does not divide this polynomial.
  Scalar divide_exact(const Scalar& divisor) const;

  /// Partial derivative in base coordinate `index`; parameters are constants
  /// and a jet f_{,alpha} maps to f_{,alpha index}.
  Scalar differentiate(std::size_t index) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string(const NameContext& names = {}) const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string to_string(const Indeterminate& v, const NameContext& names = {});

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
Scalar gcd(const Scalar& a, const Scalar& b);

}  // namespace courant
