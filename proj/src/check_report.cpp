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

#include "courant/check_report.hpp"

#include <algorithm>

namespace courant {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Error:
      return "error";
  }
  return "error";
}

std::string frame_label(const std::string& symbol, const IndexTuple& indices) {
  if (indices.empty()) return "1";
  std::string out;
  for (std::size_t i : indices) {
    if (!out.empty()) out += "^";
    out += symbol + std::to_string(i + 1);
  }
  return out;
}

bool Clause::record(const std::string& witness, std::vector<std::pair<std::string, RationalFunction>> components) {
  std::erase_if(components, [](const auto& c) { return c.second.is_zero(); });
  if (components.empty()) return false;
  if (status == Status::Pass) status = Status::Fail;
  residuals.push_back({witness, std::move(components)});
  return true;
}

bool Clause::record(const std::string& witness, const GradedSection& s, const std::string& symbol) {
  std::vector<std::pair<std::string, RationalFunction>> components;
  for (const auto& [idx, c] : s.coefficients()) components.emplace_back(frame_label(symbol, idx), c);
  return record(witness, std::move(components));
}

bool Clause::record(const std::string& witness, const RationalFunction& value) {
  return record(witness, {{"value", value}});
}

Clause& CheckReport::add_clause(std::string id, std::string description) {
  clauses.push_back(Clause{std::move(id), std::move(description), Status::Pass, {}, {}});
  return clauses.back();
}

bool CheckReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.status == Status::Pass; });
}

const Clause* CheckReport::find(const std::string& id) const {
  for (const auto& c : clauses) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (Clause c : other.clauses) {
    c.id = prefix + c.id;
    clauses.push_back(std::move(c));
  }
}

}  // namespace courant
