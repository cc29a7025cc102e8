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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "d2dsim/auction.hpp"
#include "d2dsim/config.hpp"
#include "d2dsim/harness.hpp"

namespace d2dsim::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Raw command-line options, shared by every subcommand.  Optional fields
/// record whether a flag was given, so file values survive when it was not.
struct Options
{
  std::optional<std::filesystem::path> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> cellular;    ///< N or comma list
  std::optional<std::string> d2d;         ///< N, a..b, or comma list
  std::optional<std::string> allocators;  ///< comma list
  std::filesystem::path out_dir = ".";
  bool dump_raw = false;
  std::optional<double> price_step;
  std::optional<int> package_cap;
  bool skip_negative = false;
  int num_bins = 40;
};

/// Overlays flat `key = value` lines onto base.  '#' starts a comment,
/// blank lines are skipped.  Unknown keys and malformed values are rejected
/// with a ConfigError naming the key.  The result is not range-validated
/// here; ScenarioConfig::validate runs after flag overrides are applied.
ScenarioConfig parse_config_file(std::filesystem::path const &path,
                                 ScenarioConfig base = {});

/// "4" -> {4}; "1,3,5" -> {1,3,5}; "2..5" -> {2,3,4,5} (inclusive).
std::vector<int> parse_int_list(std::string const &text);

std::vector<AllocatorKind> parse_allocator_list(std::string const &text);

/// Subcommand bodies.  Each writes its CSV outputs plus manifest.json under
/// opts.out_dir and throws on any failure, so callers map exceptions to a
/// nonzero exit status.
void run_sweep(Options const &opts);
void run_compare(Options const &opts);
void run_sinr_stats(Options const &opts);
void run_trial_dump(Options const &opts);

}  // namespace d2dsim::cli
