// Copyright 2026 The etale Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using etale::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Connected etale algebras in pre-modular fusion categories"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--catalog", cfg.catalog_path, "Catalog JSON (default: $ETALE_CATALOG, then builtin)");

  auto* classify = app.add_subcommand("classify", "Classify connected etale algebras");
  classify->add_option("--family", cfg.family, "Family id or alias, or 'all'");
  classify->add_option("--category", cfg.category, "Single dataset id");
  classify->add_option("--params", cfg.params, "Dataset filter, e.g. dX=1,h=0");
  classify->add_option("--branch", cfg.branch, "Family branch");
  classify->add_flag_callback("--symmetric", [&] { cfg.branch = "sym"; }, "Symmetric branch");
  classify->add_option("--bound", cfg.bound, "Denominator bound of the twist scan");
  classify->add_option("--format", cfg.format)->check(CLI::IsMember({"markdown", "json", "csv"}));
  classify->add_flag("--strict-monodromy", cfg.strict_monodromy, "Require theta = 0 on every channel");
  classify->add_flag("--summary", cfg.summary, "Print the per-family rollup");
  classify->add_flag("--strict", cfg.strict, "Exit 2 if any candidate is inconclusive");
  classify->add_option("--float", cfg.float_digits, "Also print decimals with this many digits");
  classify->add_option("-j,--jobs", cfg.jobs, "Parallel datasets (default: hardware threads)");

  auto* nimrep = app.add_subcommand("nimrep", "Enumerate NIM-reps of a fusion ring");
  nimrep->add_option("--ring", cfg.ring, "Fusion ring id or alias")->required();
  nimrep->add_option("--dim", cfg.dimension, "Module rank")->required();
  nimrep->add_option("--format", cfg.format)->check(CLI::IsMember({"markdown", "json"}));

  auto* confdims = app.add_subcommand("confdims", "Solve for admissible twists");
  confdims->add_option("--ring", cfg.ring, "Fusion ring id or alias")->required();
  confdims->add_option("--character", cfg.character, "Index into the sorted dimension characters");
  confdims->add_option("--mode", cfg.mode)->check(CLI::IsMember({"general", "symmetric"}));
  confdims->add_option("--pin", cfg.pins, "Fix S~ entry: i,j,value");
  confdims->add_flag("--nondegenerate", cfg.nondegenerate, "Keep only modular solutions");
  confdims->add_option("--bound", cfg.bound, "Denominator bound of the twist scan");

  auto* catalog = app.add_subcommand("catalog", "Inspect the catalog");
  catalog->add_option("what", cfg.output, "dump (default), list, or an entry id");
  catalog->add_option("--bound", cfg.bound, "Denominator bound used when expanding families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : etale::cli::kExitError;
  }

  if (*classify) return etale::cli::cmd_classify(cfg, std::cout, std::cerr);
  if (*nimrep) return etale::cli::cmd_nimrep(cfg, std::cout, std::cerr);
  if (*confdims) return etale::cli::cmd_confdims(cfg, std::cout, std::cerr);
  return etale::cli::cmd_catalog(cfg, std::cout, std::cerr);
}
