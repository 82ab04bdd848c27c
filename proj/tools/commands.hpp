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
#include <vector>

#include "model.hpp"
#include "report.hpp"

namespace courant::cli {

const std::vector<std::string>& command_names();

struct CommandOptions {
  std::string command;
  std::string model_path;
  std::string double_name;
  std::string u;
  std::string v;
  std::string graph_of;
  std::vector<std::string> h;
  bool plus = false;
  bool minus = false;
  unsigned max_degree = 2;
  bool porcelain = false;
  /// Frame triples for `anomaly`: "all" (i <= j <= k) or "strict" (i < j < k).
  std::string triples = "all";
  std::string subbundle;
  std::string morphism;
  std::string pi;
  bool strong = false;
  /// Randomized suite size and seed for `mc-residual` without --graph-of.
  unsigned samples = 20;
  unsigned long seed = 1;
};

/// Runs one command on a loaded model. Library errors propagate.
ReportDocument run_command(Model& model, const CommandOptions& options);

/// Reads and parses the model file, runs the command and renders the
/// report. Input errors become an error report with exit code 2.
struct CommandResult {
  std::string output;
  int exit_code = 0;
};
CommandResult run_file(const CommandOptions& options, const std::string& echo);
/// Same, on model text already in memory.
CommandResult run_text(const std::string& text, const CommandOptions& options, const std::string& echo);

/// Name of the most specific library error type, e.g. "SyntaxError".
std::string error_kind(const std::exception& e);

}  // namespace courant::cli
