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

#include "courant/graded_section.hpp"

#include <algorithm>

#include "courant/errors.hpp"

namespace courant {

Host common_host(const Host& a, const Host& b) {
  if (a.is_wildcard()) return b;
  if (b.is_wildcard()) return a;
  if (!(a == b)) throw HostMismatch("sections live on different bundles");
  return a;
}

int sort_sign(IndexTuple& indices) {
  int sign = 1;
  // Insertion sort counting transpositions; tuples are short.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::vector<IndexTuple> increasing_tuples(std::size_t r, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > r) return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

GradedSection::GradedSection(std::size_t rank, std::size_t degree, Host host)
    : rank_(rank), degree_(degree), host_(host) {}

GradedSection GradedSection::function(std::size_t rank, const RationalFunction& f, Host host) {
  GradedSection s(rank, 0, host);
  s.add({}, f);
  return s;
}

GradedSection GradedSection::basis(std::size_t rank, const IndexTuple& indices, Host host) {
  GradedSection s(rank, indices.size(), host);
  s.add(indices, RationalFunction(1));
  return s;
}

GradedSection GradedSection::vector(const std::vector<RationalFunction>& components, Host host) {
  GradedSection s(components.size(), 1, host);
  for (std::size_t i = 0; i < components.size(); ++i) s.add({i}, components[i]);
  return s;
}

GradedSection GradedSection::with_host(Host host) const {
  GradedSection out = *this;
  out.host_ = host;
  return out;
}

RationalFunction GradedSection::coefficient(const IndexTuple& indices) const {
  if (indices.size() != degree_) return {};
  IndexTuple sorted = indices;
  const int sign = sort_sign(sorted);
  if (sign == 0) return {};
  const auto it = coeffs_.find(sorted);
  if (it == coeffs_.end()) return {};
  return sign > 0 ? it->second : -it->second;
}

std::vector<RationalFunction> GradedSection::components() const {
  if (degree_ != 1) throw ShapeError("components() needs a degree-1 section");
  std::vector<RationalFunction> out(rank_);
  for (const auto& [idx, c] : coeffs_) out[idx[0]] = c;
  return out;
}

void GradedSection::add(const IndexTuple& indices, const RationalFunction& c) {
  if (c.is_zero()) return;
  if (indices.size() != degree_) throw ShapeError("index tuple of wrong degree");
  IndexTuple sorted = indices;
  for (std::size_t i : sorted) {
    if (i >= rank_) throw ShapeError("frame index out of range");
  }
  const int sign = sort_sign(sorted);
  if (sign == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(sorted);
  if (sign > 0) it->second += c;
  else it->second -= c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

void GradedSection::check_compatible(const GradedSection& other) const {
  if (rank_ != other.rank_ || degree_ != other.degree_) {
    throw ShapeError("sections of different rank or degree");
  }
  (void)common_host(host_, other.host_);
}

GradedSection GradedSection::operator-() const {
  GradedSection out = *this;
  for (auto& [idx, c] : out.coeffs_) c = -c;
  return out;
}

GradedSection& GradedSection::operator+=(const GradedSection& rhs) {
  check_compatible(rhs);
  host_ = common_host(host_, rhs.host_);
  for (const auto& [idx, c] : rhs.coeffs_) add(idx, c);
  return *this;
}

GradedSection& GradedSection::operator-=(const GradedSection& rhs) {
  check_compatible(rhs);
  host_ = common_host(host_, rhs.host_);
  for (const auto& [idx, c] : rhs.coeffs_) add(idx, -c);
  return *this;
}

GradedSection GradedSection::scaled(const RationalFunction& f) const {
  GradedSection out(rank_, degree_, host_);
  if (f.is_zero()) return out;
  for (const auto& [idx, c] : coeffs_) out.coeffs_.emplace(idx, c * f);
  return out;
}

bool operator==(const GradedSection& a, const GradedSection& b) {
  return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::string GradedSection::to_string(const std::string& symbol, const NameContext& names) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : coeffs_) {
    std::string basis;
    for (std::size_t i : idx) {
      if (!basis.empty()) basis += "^";
      basis += symbol + std::to_string(i + 1);
    }
    std::string coeff = c.to_string(names);
    const bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
    if (compound) coeff = "(" + coeff + ")";
    if (!out.empty()) out += " + ";
    if (basis.empty()) out += coeff;
    else if (coeff == "1") out += basis;
    else out += coeff + "*" + basis;
  }
  return out;
}

GradedSection wedge(const GradedSection& a, const GradedSection& b) {
  if (a.rank() != b.rank()) throw ShapeError("wedge of sections of different rank");
  GradedSection out(a.rank(), a.degree() + b.degree(), common_host(a.host(), b.host()));
  for (const auto& [ia, ca] : a.coefficients()) {
    for (const auto& [ib, cb] : b.coefficients()) {
      IndexTuple joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      out.add(joined, ca * cb);
    }
  }
  return out;
}

GradedSection contract(const GradedSection& v, const GradedSection& s) {
  if (v.degree() != 1) throw ShapeError("contraction needs a degree-1 argument");
  if (s.degree() == 0) throw ShapeError("cannot contract into a degree-0 section");
  if (v.rank() != s.rank()) throw ShapeError("contraction of sections of different rank");
  GradedSection out(s.rank(), s.degree() - 1, s.host());
  for (const auto& [idx, c] : s.coefficients()) {
    // s = c e_{i0} ^ ... ; moving slot p to the front costs (-1)^p.
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const RationalFunction vp = v.coefficient({idx[p]});
      if (vp.is_zero()) continue;
      IndexTuple rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q != p) rest.push_back(idx[q]);
      }
      out.add(rest, p % 2 == 0 ? c * vp : -(c * vp));
    }
  }
  return out;
}

RationalFunction pair(const GradedSection& a, const GradedSection& b) {
  if (a.degree() != 1 || b.degree() != 1) throw ShapeError("pairing needs degree-1 sections");
  RationalFunction out;
  for (const auto& [idx, c] : a.coefficients()) {
    const RationalFunction other = b.coefficient(idx);
    if (!other.is_zero()) out += c * other;
  }
  return out;
}

RationalFunction evaluate(const GradedSection& s, const std::vector<GradedSection>& args) {
  if (args.size() != s.degree()) throw ShapeError("evaluation with the wrong number of arguments");
  GradedSection current = s;
  for (const auto& a : args) current = contract(a, current);
  return current.value();
}

}  // namespace courant
