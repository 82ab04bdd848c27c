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

#include "courant/rational_function.hpp"

#include "courant/errors.hpp"

namespace courant {

RationalFunction::RationalFunction(const Scalar& numerator, const Scalar& denominator)
    : num_(numerator), den_(denominator) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Scalar(1);
    return;
  }
  if (!den_.is_constant()) {
    const Scalar g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  const Rational lead = den_.leading_coefficient();
  if (!lead.is_one()) {
    const Rational inv = Rational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Scalar(1);
    return *this;
  }
  if (rhs.den_.is_constant()) {
    num_ += rhs.num_ * den_;
    normalize();
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * rhs.den_ + rhs.num_;
    den_ = rhs.den_;
    normalize();
    return *this;
  }
  const Scalar g = gcd(den_, rhs.den_);
  const Scalar b = den_.divide_exact(g);
  const Scalar d = rhs.den_.divide_exact(g);
  num_ = num_ * d + rhs.num_ * b;
  den_ = b * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RationalFunction();
  if (den_.is_constant() && rhs.den_.is_constant()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel so the product is already in lowest terms.
  const Scalar g1 = gcd(num_, rhs.den_);
  const Scalar g2 = gcd(rhs.num_, den_);
  Scalar n = num_.divide_exact(g1) * rhs.num_.divide_exact(g2);
  Scalar d = den_.divide_exact(g2) * rhs.den_.divide_exact(g1);
  const Rational lead = d.leading_coefficient();
  if (!lead.is_one()) {
    const Rational inv = Rational(1) / lead;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("division by zero rational function");
  RationalFunction out(den_, num_, Reduced{});
  const Rational lead = out.den_.leading_coefficient();
  if (!lead.is_one()) {
    const Rational inv = Rational(1) / lead;
    out.num_ = out.num_.scaled(inv);
    out.den_ = out.den_.scaled(inv);
  }
  return out;
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  // Powers of coprime polynomials stay coprime.
  return RationalFunction(num_.pow(exponent), den_.pow(exponent), Reduced{});
}

RationalFunction RationalFunction::differentiate(std::size_t index) const {
  if (den_.is_constant()) return RationalFunction(num_.differentiate(index), den_, Reduced{});
  const Scalar top = num_.differentiate(index) * den_ - num_ * den_.differentiate(index);
  return RationalFunction(top, den_ * den_);
}

namespace {

bool is_single_indeterminate(const Scalar& s) {
  if (!s.is_monomial()) return false;
  const Term& t = s.leading_term();
  return t.coefficient.is_one() && t.monomial.factors().size() == 1;
}

}  // namespace

std::string RationalFunction::to_string(const NameContext& names) const {
  if (den_.is_constant()) return num_.to_string(names);
  std::string top = num_.to_string(names);
  if (num_.size() > 1) top = "(" + top + ")";
  std::string bottom = den_.to_string(names);
  if (!is_single_indeterminate(den_)) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace courant
