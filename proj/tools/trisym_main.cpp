/*
 * Copyright 2026 The Trisym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "trisym/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"trisym: symplectic area analysis of cycles in flat "
               "hyperkahler tori"};
  app.require_subcommand(1);

  std::string config_path;
  std::string cycle_id;
  std::string out_path;
  int grid = 0;

  const auto add_common = [&](CLI::App* cmd, bool needs_cycle) {
    cmd->add_option("--config", config_path, "scenario config file (JSON)")
        ->required();
    if (needs_cycle) {
      cmd->add_option("--cycle", cycle_id, "cycle id from the config")
          ->required();
    }
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  CLI::App* verify =
      app.add_subcommand("verify", "run the invariant suites on the config");
  add_common(verify, false);

  CLI::App* analyze =
      app.add_subcommand("analyze", "polynomial, maxima and verdict for one "
                                    "cycle");
  add_common(analyze, true);

  CLI::App* scan = app.add_subcommand(
      "scan-sphere", "tabulate the volume function over the sphere as CSV");
  add_common(scan, true);
  scan->add_option("--grid", grid, "Fibonacci node count (overrides config)");

  CLI::App* genericity = app.add_subcommand(
      "genericity", "approximate the non-generic set over the cycle suite");
  add_common(genericity, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return trisym::kExitConfigError;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "config error: cannot open output file '" << out_path
                << "'\n";
      return trisym::kExitConfigError;
    }
    out = &file;
  }

  trisym::ScenarioConfig config;
  try {
    config = trisym::load_config(config_path);
  } catch (const trisym::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return trisym::kExitConfigError;
  }

  if (verify->parsed()) return trisym::cmd_verify(config, *out);
  if (analyze->parsed()) return trisym::cmd_analyze(config, cycle_id, *out);
  if (scan->parsed()) {
    return trisym::cmd_scan_sphere(config, cycle_id, grid, *out);
  }
  return trisym::cmd_genericity(config, *out);
}
