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

#include <ostream>
#include <string>

#include "courant/scalar.hpp"

namespace courant {

/// Quotient of two Scalars in lowest terms with a monic denominator.
///
/// Zero is 0/1. Because the representation is canonical, equality is a
/// componentwise comparison.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Scalar& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long value) : RationalFunction(Scalar(value)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int value) : RationalFunction(Scalar(value)) {}   // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& value) : RationalFunction(Scalar(value)) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error when `denominator` is zero.
  RationalFunction(const Scalar& numerator, const Scalar& denominator);

  const Scalar& numerator() const noexcept { return num_; }
  const Scalar& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return den_.is_constant() && num_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  /// Throws Error on zero.
  RationalFunction inverse() const;
  RationalFunction pow(unsigned exponent) const;
  RationalFunction differentiate(std::size_t index) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Parseable text; denominators are parenthesized unless they are a
  /// single indeterminate.
  std::string to_string(const NameContext& names = {}) const;

 private:
  struct Reduced {};
  RationalFunction(Scalar numerator, Scalar denominator, Reduced) : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  Scalar num_;
  Scalar den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace courant
