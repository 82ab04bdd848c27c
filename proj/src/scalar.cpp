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

#include "courant/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "courant/errors.hpp"

namespace courant {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Indeterminate v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

std::uint32_t Monomial::exponent(const Indeterminate& v) const noexcept {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
    if (v < var) break;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  auto io = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (io != other.factors_.end() && io->first < v) ++io;
    if (io == other.factors_.end() || io->first != v || io->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  auto id = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (id != divisor.factors_.end() && id->first == v) {
      sub = id->second;
      ++id;
    }
    if (e < sub) throw Error("monomial quotient is not a monomial");
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  if (id != divisor.factors_.end()) throw Error("monomial quotient is not a monomial");
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::without(const Indeterminate& v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != v) {
      out.factors_.push_back(f);
      out.degree_ += f.second;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first != ib->first) {
      return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- printing

std::string NameContext::coordinate_name(std::size_t index) const {
  if (index < coordinates.size()) return coordinates[index];
  return "x" + std::to_string(index + 1);
}

std::string to_string(const Indeterminate& v, const NameContext& names) {
  switch (v.kind) {
    case IndeterminateKind::Coordinate:
      return names.coordinate_name(v.id);
    case IndeterminateKind::Parameter:
      return SymbolTable::name(v.id);
    case IndeterminateKind::Jet: {
      std::string out = SymbolTable::name(v.id);
      if (v.jet == 0) return out;
      out += "_{";
      bool first = true;
      for (std::size_t k : v.multi_index()) {
        if (!first) out += ",";
        out += names.coordinate_name(k);
        first = false;
      }
      return out + "}";
    }
  }
  return "?";
}

namespace {

std::string monomial_string(const Monomial& m, const NameContext& names) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += to_string(v, names);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Scalar::to_string(const NameContext& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += monomial_string(m, names);
    } else {
      out += mag.to_string() + "*" + monomial_string(m, names);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Rational& value) {
  if (!value.is_zero()) terms_.push_back({Monomial{}, value});
}

Scalar::Scalar(const Rational& coefficient, Monomial monomial) {
  if (!coefficient.is_zero()) terms_.push_back({std::move(monomial), coefficient});
}

Scalar Scalar::variable(Indeterminate v) { return Scalar(Rational(1), Monomial(v)); }

Scalar Scalar::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  Scalar out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coefficient += t.coefficient;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
  return out;
}

bool Scalar::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Scalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  const auto& last = terms_.back();
  return last.monomial.is_one() ? last.coefficient : Rational(0);
}

const Term& Scalar::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Scalar::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t Scalar::degree_in(const Indeterminate& v) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

std::set<Indeterminate> Scalar::variables() const {
  std::set<Indeterminate> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) out.insert(f.first);
  }
  return out;
}

std::vector<Scalar> Scalar::coefficients_in(const Indeterminate& v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& t : terms_) {
    buckets[t.monomial.exponent(v)].push_back({t.monomial.without(v), t.coefficient});
  }
  std::vector<Scalar> out;
  out.reserve(buckets.size());
  // Removing one variable keeps the relative order within a bucket.
  for (auto& b : buckets) {
    Scalar s;
    s.terms_ = std::move(b);
    out.push_back(std::move(s));
  }
  return out;
}

Scalar Scalar::from_coefficients(const std::vector<Scalar>& coeffs, const Indeterminate& v) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial power(v, static_cast<std::uint32_t>(k));
    for (const auto& t : coeffs[k].terms_) terms.push_back({t.monomial * power, t.coefficient});
  }
  return from_terms(std::move(terms));
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    const auto c = ia->monomial <=> ib->monomial;
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back(*ib++);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational sum = subtract ? ia->coefficient - ib->coefficient : ia->coefficient + ib->coefficient;
      if (!sum.is_zero()) out.push_back({ia->monomial, std::move(sum)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back(*ia);
  for (; ib != b.end(); ++ib) {
    out.push_back(*ib);
    if (subtract) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out = a;
  return out += b;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar out = a;
  return out -= b;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  const Scalar& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Scalar& large = a.terms_.size() <= b.terms_.size() ? b : a;
  if (small.terms_.size() == 1) {
    // Multiplication by a monomial preserves the term order.
    const auto& [m, c] = small.terms_.front();
    Scalar out;
    out.terms_.reserve(large.terms_.size());
    for (const auto& t : large.terms_) out.terms_.push_back({t.monomial * m, t.coefficient * c});
    return out;
  }
  std::vector<Term> terms;
  terms.reserve(small.terms_.size() * large.terms_.size());
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) terms.push_back({s.monomial * l.monomial, s.coefficient * l.coefficient});
  }
  return Scalar::from_terms(std::move(terms));
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

Scalar Scalar::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  Scalar out = *this;
  for (auto& t : out.terms_) t.coefficient *= factor;
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar Scalar::monic() const {
  if (terms_.empty() || terms_.front().coefficient.is_one()) return *this;
  return scaled(Rational(1) / terms_.front().coefficient);
}

Scalar Scalar::divide_exact(const Scalar& divisor) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (divisor.is_constant()) return scaled(Rational(1) / divisor.constant_value());
  Scalar remainder = *this;
  std::vector<Term> quotient;
  const Term& lead = divisor.leading_term();
  while (!remainder.is_zero()) {
    const Term& lt = remainder.leading_term();
    if (!lead.monomial.divides(lt.monomial)) throw Error("polynomial division is not exact");
    Term q{lt.monomial.quotient(lead.monomial), lt.coefficient / lead.coefficient};
    remainder -= divisor * Scalar(q.coefficient, q.monomial);
    quotient.push_back(std::move(q));
  }
  // Quotient terms are produced in decreasing order already.
  Scalar out;
  out.terms_ = std::move(quotient);
  return out;
}

Scalar Scalar::differentiate(std::size_t index) const {
  const Indeterminate x = Indeterminate::coordinate(index);
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) {
      if (v.kind == IndeterminateKind::Parameter) continue;
      if (v.kind == IndeterminateKind::Coordinate) {
        if (v != x) continue;
        Monomial rest = m.quotient(Monomial(v, 1));
        out.push_back({std::move(rest), c * Rational(static_cast<long>(e))});
      } else {
        Monomial rest = m.quotient(Monomial(v, 1)) * Monomial(v.differentiated(index), 1);
        out.push_back({std::move(rest), c * Rational(static_cast<long>(e))});
      }
    }
  }
  return from_terms(std::move(out));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial) return false;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  }
  return true;
}

// ---------------------------------------------------------------- gcd

namespace {

Scalar gcd_impl(const Scalar& a, const Scalar& b);

/// Groups the terms of `a` by their projection onto `vars`; each group is a
/// coefficient free of `vars`.
std::vector<Scalar> coefficients_in_set(const Scalar& a, const std::set<Indeterminate>& vars) {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : a.terms()) {
    Monomial key;
    Monomial rest = t.monomial;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (vars.count(v)) {
        key = key * Monomial(v, e);
        rest = rest.without(v);
      }
    }
    groups[key].push_back({std::move(rest), t.coefficient});
  }
  std::vector<Scalar> out;
  out.reserve(groups.size());
  for (auto& [key, terms] : groups) out.push_back(Scalar::from_terms(std::move(terms)));
  // Small coefficients first make the running gcd collapse sooner.
  std::sort(out.begin(), out.end(), [](const Scalar& x, const Scalar& y) { return x.size() < y.size(); });
  return out;
}

Scalar gcd_many(Scalar g, const std::vector<Scalar>& items) {
  for (const auto& c : items) {
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero()) return Scalar(1);
  }
  return g;
}

Scalar monomial_gcd(const Term& mono, const Scalar& p) {
  Monomial out;
  for (const auto& [v, e] : mono.monomial.factors()) {
    std::uint32_t m = e;
    for (const auto& t : p.terms()) {
      m = std::min(m, t.monomial.exponent(v));
      if (m == 0) break;
    }
    if (m > 0) out = out * Monomial(v, m);
  }
  return Scalar(Rational(1), out);
}

using Univariate = std::vector<Scalar>;

void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Scalar content(const Univariate& p) {
  Scalar g;
  for (const auto& c : p) {
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero()) return Scalar(1);
  }
  return g;
}

/// Rescales so all rational coefficients are coprime integers; over Q this
/// keeps remainder sequences from growing exponentially.
void strip_numeric_content(Univariate& p) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : p) {
    for (const auto& t : c.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.numerator().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.denominator().get_mpz_t());
    }
  }
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  const Rational factor(mpq_class(den_lcm, num_gcd));
  for (auto& c : p) c = c.scaled(factor);
}

Univariate primitive_part(const Univariate& p) {
  const Scalar c = content(p);
  Univariate out;
  if (c.is_constant()) {
    out = p;
  } else {
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(x.divide_exact(c));
  }
  strip_numeric_content(out);
  return out;
}

/// Sparse pseudo-remainder of a by b in the main variable.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const Scalar& lcb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t da = a.size() - 1;
    const Scalar lca = a.back();
    const std::size_t shift = da - db;
    for (auto& c : a) c *= lcb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= lca * b[k];
    trim(a);
  }
  return a;
}

Scalar gcd_impl(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Scalar(1);
  if (a.is_monomial()) return monomial_gcd(a.leading_term(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading_term(), a);
  if (a == b) return a.monic();

  const auto va = a.variables();
  const auto vb = b.variables();
  std::set<Indeterminate> only_a;
  std::set<Indeterminate> only_b;
  std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::inserter(only_a, only_a.end()));
  std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::inserter(only_b, only_b.end()));
  if (!only_a.empty()) return gcd_many(b, coefficients_in_set(a, only_a));
  if (!only_b.empty()) return gcd_many(a, coefficients_in_set(b, only_b));

  // Same variable set: primitive PRS in the variable of least degree.
  Indeterminate main = *va.begin();
  std::uint32_t best = ~0U;
  for (const auto& v : va) {
    const auto d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }
  Univariate pa = a.coefficients_in(main);
  Univariate pb = b.coefficients_in(main);
  const Scalar ca = content(pa);
  const Scalar cb = content(pb);
  const Scalar c = gcd_impl(ca, cb);
  pa = primitive_part(pa);
  pb = primitive_part(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (true) {
    if (pb.size() == 1) return c.monic();
    Univariate r = pseudo_remainder(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) return c.monic();
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  return (c * Scalar::from_coefficients(pb, main)).monic();
}

}  // namespace

Scalar gcd(const Scalar& a, const Scalar& b) { return gcd_impl(a, b); }

}  // namespace courant
