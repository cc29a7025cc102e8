//------------------------------------------------------------------------------
//
//   Copyright 2026 The d2dsim Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "d2dsim/cli.hpp"

namespace {

void add_common(CLI::App *cmd, d2dsim::cli::Options &opts)
{
  cmd->add_option_function<std::string>(
      "--config",
      [&opts](std::string const &v) { opts.config_path = v; },
      "Scenario config file (flat key = value lines, # comments)");
  cmd->add_option_function<std::uint64_t>(
      "--seed", [&opts](std::uint64_t v) { opts.seed = v; },
      "Base seed for drop generation (overrides config)");
  cmd->add_option_function<int>(
      "--trials", [&opts](int v) { opts.trials = v; },
      "Monte Carlo trials per sweep point");
  cmd->add_option_function<std::string>(
      "--cellular", [&opts](std::string const &v) { opts.cellular = v; },
      "Cellular UE count: N or comma list");
  cmd->add_option_function<std::string>(
      "--d2d", [&opts](std::string const &v) { opts.d2d = v; },
      "D2D pair count: N, a..b (inclusive) or comma list");
  cmd->add_option_function<std::string>(
      "--allocators", [&opts](std::string const &v) { opts.allocators = v; },
      "Comma list of: random, rica, new-auction, exhaustive");
  cmd->add_option_function<std::string>(
      "--out", [&opts](std::string const &v) { opts.out_dir = v; },
      "Output directory (default: current directory)");
  cmd->add_option_function<double>(
      "--price-step", [&opts](double v) { opts.price_step = v; },
      "Auction clock decrement per round");
  cmd->add_option_function<int>(
      "--package-cap", [&opts](int v) { opts.package_cap = v; },
      "Largest package a resource may bid on");
  cmd->add_flag("--skip-negative", opts.skip_negative,
                "Sum-rate auction: leave negative-gain pairs unassigned");
  cmd->add_flag("--dump-raw", opts.dump_raw,
                "Also write per-trial raw samples where applicable");
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"D2D underlay downlink spectrum allocation simulator"};
  app.set_version_flag("--version", std::string(d2dsim::cli::kVersion));
  app.require_subcommand(1);

  d2dsim::cli::Options opts;

  CLI::App *sweep = app.add_subcommand(
      "sweep", "Mean sum-rate curve over D2D pair counts, CSV output");
  add_common(sweep, opts);

  CLI::App *compare = app.add_subcommand(
      "compare", "Paired allocator comparison with difference summary");
  add_common(compare, opts);

  CLI::App *sinr = app.add_subcommand(
      "sinr-stats", "UE1 SINR histogram, moments and skewness");
  add_common(sinr, opts);
  sinr->add_option("--bins", opts.num_bins, "Histogram bin count")
      ->check(CLI::PositiveNumber);

  CLI::App *trial = app.add_subcommand(
      "trial", "Single-drop debug dump: topology, gains, allocation trace");
  add_common(trial, opts);

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::CallForVersion const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try
  {
    if (sweep->parsed())
    {
      d2dsim::cli::run_sweep(opts);
    }
    else if (compare->parsed())
    {
      d2dsim::cli::run_compare(opts);
    }
    else if (sinr->parsed())
    {
      d2dsim::cli::run_sinr_stats(opts);
    }
    else if (trial->parsed())
    {
      d2dsim::cli::run_trial_dump(opts);
    }
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
