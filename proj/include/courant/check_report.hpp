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

#include <string>
#include <deque>
#include <utility>
#include <vector>

#include "courant/graded_section.hpp"

namespace courant {

enum class Status { Pass, Fail, Error };

std::string to_string(Status status);

/// A nonzero quantity found while checking a clause, labelled by the
/// inputs that produced it.
struct Residual {
  std::string witness;
  std::vector<std::pair<std::string, RationalFunction>> components;
};

struct Clause {
  std::string id;
  std::string description;
  Status status = Status::Pass;
  std::vector<Residual> residuals;
  std::string note;

  /// Records a residual if any component is nonzero and marks the clause
  /// failed. Returns true when something was recorded.
  bool record(const std::string& witness, std::vector<std::pair<std::string, RationalFunction>> components);
  /// Records every nonzero coefficient of `s`, labelled `symbol` + indices.
  bool record(const std::string& witness, const GradedSection& s, const std::string& symbol);
  bool record(const std::string& witness, const RationalFunction& value);
};

/// Structured verdict: an ordered list of clauses.
struct CheckReport {
  std::string title;
  /// A deque so references returned by add_clause stay valid.
  std::deque<Clause> clauses;

  Clause& add_clause(std::string id, std::string description);
  bool passed() const;
  const Clause* find(const std::string& id) const;
  /// Appends the clauses of `other`, prefixing their ids.
  void merge(const CheckReport& other, const std::string& prefix = "");
};

/// Label for a frame tuple, e.g. `e1^e3`.
std::string frame_label(const std::string& symbol, const IndexTuple& indices);

}  // namespace courant
