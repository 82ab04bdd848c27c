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

#include "courant/subbundle.hpp"

#include "courant/errors.hpp"

namespace courant {

RFVector flatten(const DoubleSection& e) {
  RFVector out = e.X.components();
  const RFVector xi = e.xi.components();
  out.insert(out.end(), xi.begin(), xi.end());
  return out;
}

SubbundleSpec::SubbundleSpec(DoubleStructure host, std::vector<DoubleSection> spanning, std::size_t expected_rank)
    : host_(std::move(host)), spanning_(std::move(spanning)) {
  const std::vector<RFVector> r = rows();
  const std::size_t actual = r.empty() ? 0 : courant::rank(RFMatrix(r.begin(), r.end()));
  if (actual != expected_rank || spanning_.size() != expected_rank) {
    throw RankDeficient("subbundle has generic rank " + std::to_string(actual) + " with " +
                        std::to_string(spanning_.size()) + " spanning sections, expected " +
                        std::to_string(expected_rank));
  }
}

SubbundleSpec::SubbundleSpec(DoubleStructure host, std::vector<DoubleSection> spanning)
    : SubbundleSpec(host, spanning, spanning.size()) {}

std::vector<RFVector> SubbundleSpec::rows() const {
  std::vector<RFVector> out;
  out.reserve(spanning_.size());
  for (const DoubleSection& s : spanning_) out.push_back(flatten(s));
  return out;
}

std::optional<RFVector> SubbundleSpec::coordinates(const DoubleSection& e) const {
  if (spanning_.empty()) {
    if (e.is_zero()) return RFVector{};
    return std::nullopt;
  }
  return solve_in_span(flatten(e), rows());
}

bool is_isotropic(const SubbundleSpec& L, Sign sign) {
  const auto& S = L.spanning();
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i; j < S.size(); ++j) {
      if (!L.host().pairing(S[i], S[j], sign).is_zero()) return false;
    }
  }
  return true;
}

CheckReport integrability_oracle(const SubbundleSpec& L) {
  if (!is_isotropic(L)) throw NotIsotropic("subbundle is not isotropic for (.,.)_+");
  const DoubleStructure& D = L.host();
  const auto& S = L.spanning();
  CheckReport report;
  report.title = "integrability";
  Clause& closure = report.add_clause("closure", "[S_i, S_j] lies in span(S)");
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      const DoubleSection b = D.bracket(S[i], S[j]);
      if (b.is_zero() || L.coordinates(b)) continue;
      std::vector<std::pair<std::string, RationalFunction>> components;
      for (const auto& [I, c] : b.X.coefficients()) components.emplace_back(frame_label("e", I), c);
      for (const auto& [I, c] : b.xi.coefficients()) components.emplace_back(frame_label("eps", I), c);
      closure.record("[S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + "]", components);
    }
  }
  return report;
}

namespace {

/// Algebroid on span(frame) with the restricted bracket and anchor.
LieAlgebroid restrict_to(const DoubleStructure& D, const std::vector<DoubleSection>& frame, const std::string& name) {
  const std::size_t r = frame.size();
  const SubbundleSpec span(D, frame);
  RFMatrix anchor;
  for (const DoubleSection& s : frame) anchor.push_back(D.rho(s));
  auto table = LieAlgebroid::empty_table(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto c = span.coordinates(D.bracket(frame[i], frame[j]));
      if (!c) throw NotIntegrable(name + " is not closed under the bracket");
      table[i][j] = *c;
      for (std::size_t k = 0; k < r; ++k) table[j][i][k] = -(*c)[k];
    }
  }
  return LieAlgebroid(D.base_dim(), r, std::move(anchor), std::move(table), name);
}

}  // namespace

DoubleStructure recover_bialgebroid(const DoubleStructure& D, const SubbundleSpec& L1, const SubbundleSpec& L2) {
  const std::size_t r = D.rank();
  if (L1.rank() != r || L2.rank() != r) throw NotTransverse("both subbundles must have rank " + std::to_string(r));
  std::vector<RFVector> all = L1.rows();
  for (const RFVector& row : L2.rows()) all.push_back(row);
  if (determinant(RFMatrix(all.begin(), all.end())).is_zero()) throw NotTransverse("L1 + L2 is not all of E");
  if (!is_isotropic(L1)) throw NotIsotropic("L1 is not isotropic");
  if (!is_isotropic(L2)) throw NotIsotropic("L2 is not isotropic");
  if (!integrability_oracle(L1).passed()) throw NotIntegrable("L1 is not closed under the bracket");
  if (!integrability_oracle(L2).passed()) throw NotIntegrable("L2 is not closed under the bracket");

  // G[j][i] = 2 (t_j, s_i)_+; the dual frame is G^{-1} t.
  const auto& s = L1.spanning();
  const auto& t = L2.spanning();
  RFMatrix G = zero_matrix(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) G[j][i] = RationalFunction(2) * D.pairing(t[j], s[i], Sign::Plus);
  }
  const RFMatrix M = invert_matrix(G);
  std::vector<DoubleSection> dual;
  for (std::size_t i = 0; i < r; ++i) {
    DoubleSection acc = D.zero();
    for (std::size_t j = 0; j < r; ++j) {
      if (!M[i][j].is_zero()) acc += t[j].scaled(M[i][j]);
    }
    dual.push_back(acc);
  }
  return DoubleStructure(restrict_to(D, s, "L1"), restrict_to(D, dual, "L2"));
}

}  // namespace courant
