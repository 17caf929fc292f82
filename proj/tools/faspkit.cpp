// Copyright 2026 The faspkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "faspkit/cli/run.hpp"

int main(int argc, char** argv) {
  using faspkit::cli::Invocation;
  CLI::App app{"faspkit: fuzzy answer set programming toolkit"};
  app.require_subcommand(1);
  Invocation inv;
  std::string model;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", inv.input, "ground or schematic .fasp program")->required();
    sub->add_flag("--include-aux", inv.include_aux, "report normalization atoms (__aux*)");
    sub->add_flag("--pretty", inv.pretty, "human-readable output");
    sub->add_option("--max-support", inv.max_support, "largest atom set searched for loops")
        ->check(CLI::PositiveNumber);
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid-denominator", inv.grid_denominator,
                    "grid step 1/N; default: lcm of the program's constants")
        ->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "find an answer set");
  add_common(solve);
  add_grid(solve);
  solve->add_option("--backend", inv.backend, "milp or grid")->check(CLI::IsMember({"milp", "grid"}));
  solve->add_option("--loop-mode", inv.loop_mode, "all or maximal")->check(CLI::IsMember({"all", "maximal"}));
  solve->add_flag("--trace", inv.trace, "print every iteration");
  solve->add_option("--maximize", inv.maximize, "atoms whose sum each model maximizes");

  auto* check = app.add_subcommand("check", "diagnose an interpretation");
  add_common(check);
  check->add_option("--model", model, "JSON interpretation, or @file")->required();

  auto* complete = app.add_subcommand("complete", "print the completion");
  add_common(complete);

  auto* loops = app.add_subcommand("loops", "list loops of the dependency graph");
  add_common(loops);
  loops->add_option("--loop-mode", inv.loop_mode, "all or maximal")->check(CLI::IsMember({"all", "maximal"}));
  loops->add_option("--model", model, "restrict to the support of model minus lfp");

  auto* ground = app.add_subcommand("ground", "print the ground program");
  add_common(ground);

  auto* lp = app.add_subcommand("export-lp", "write the completion's MILP in LP format");
  add_common(lp);
  lp->add_option("--maximize", inv.maximize, "objective atoms");

  auto* oracle = app.add_subcommand("oracle", "enumerate answer sets on a grid");
  add_common(oracle);
  add_grid(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(faspkit::cli::ExitCode::Usage);
  }
  inv.command = app.get_subcommands().front()->get_name();
  if (!model.empty()) inv.model = model;
  return faspkit::cli::run(inv, std::cout, std::cerr);
}
