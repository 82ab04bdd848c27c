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

#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using courant::cli::CommandOptions;
  CommandOptions o;
  CLI::App app{"Checks Courant algebroid, Lie bialgebroid and Dirac structure identities on a model file"};
  app.set_help_flag("--help", "print this help and exit");
  app.add_option("command", o.command, "what to check")->required()->check(CLI::IsMember(courant::cli::command_names()));
  app.add_option("model", o.model_path, "model file")->required();
  app.add_option("--double", o.double_name, "double to work on");
  app.add_option("--u", o.u, "first Poisson bivector for compose");
  app.add_option("--v", o.v, "second Poisson bivector for compose");
  app.add_option("--graph-of", o.graph_of, "bivector or 2-form whose graph is used");
  app.add_option("--h", o.h, "vector sections spanning h")->expected(1, -1);
  auto* plus = app.add_flag("--plus", o.plus, "compose as U (U+V)^-1 V");
  app.add_flag("--minus", o.minus, "compose through the difference U - V")->excludes(plus);
  app.add_option("--max-degree", o.max_degree, "polynomial degree in the randomized suite")->capture_default_str();
  app.add_flag("--porcelain", o.porcelain, "print JSON");
  app.add_option("--triples", o.triples, "frame triples for anomaly")
      ->check(CLI::IsMember({"all", "strict"}))
      ->capture_default_str();
  app.add_option("--subbundle", o.subbundle, "subbundle to test");
  app.add_option("--morphism", o.morphism, "morphism to test");
  app.add_option("--pi", o.pi, "Poisson bivector");
  app.add_flag("--strong", o.strong, "also test the strong Hamiltonian condition");
  app.add_option("--samples", o.samples, "randomized suite size")->capture_default_str();
  app.add_option("--seed", o.seed, "randomized suite seed")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  const auto result = courant::cli::run_file(o, echo);
  std::cout << result.output;
  return result.exit_code;
}
