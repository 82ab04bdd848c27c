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
#include <utility>
#include <vector>

#include "courant/check_report.hpp"

namespace courant::cli {

/// Everything one command produced, in the order it is printed.
struct ReportDocument {
  /// The command line echoed back, without the program name.
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  std::vector<CheckReport> reports;
  /// Set when the input could not be used; reports are then empty.
  std::string error_kind;
  std::string error_message;

  bool passed() const;
  /// 0 when every clause passes, 1 when one fails, 2 on an input error.
  int exit_code() const;
};

/// Residuals are printed with `names` for the coordinates.
std::string render_text(const ReportDocument& report, const NameContext& names);
std::string render_json(const ReportDocument& report, const NameContext& names);

}  // namespace courant::cli
