#pragma once
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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d2dsim/auction.hpp"
#include "d2dsim/config.hpp"
#include "d2dsim/instance.hpp"

namespace d2dsim {

/// The allocation mechanisms the harness can run.
enum class AllocatorKind
{
  Random,
  Rica,
  NewAuction,
  Exhaustive,
};

/// Maps "random" / "rica" / "new-auction" / "exhaustive"; UsageError
/// otherwise.
AllocatorKind parse_allocator_name(std::string_view name);
std::string_view allocator_name(AllocatorKind kind);

/// Outcome of one drop + one allocator run.
struct TrialResult
{
  std::uint64_t seed = 0;
  std::string allocator;
  int    num_cellular = 0;
  int    num_d2d      = 0;
  double sum_rate     = 0.0;  ///< bit/s/Hz of the returned allocation
  double ue1_sinr_db  = 0.0;  ///< SINR of cellular UE 0 after allocation
  double revenue      = 0.0;  ///< 0 for the non-auction allocators
  double runtime_ms   = 0.0;
};

/// Raw trials of one experiment plus the configuration they share (swept
/// fields vary per trial).
struct ExperimentResult
{
  ScenarioConfig base_config;
  std::vector<TrialResult> trials;
};

/// Worker threads for trial execution: the D2DSIM_THREADS environment
/// variable caps std::thread::hardware_concurrency(); a `max_threads`
/// argument > 0 overrides both.
unsigned effective_threads(unsigned max_threads = 0);

/// Builds the drop for (config, seed).  Topology and gains use the derived
/// seeds 3*seed and 3*seed+1 so their streams never overlap across trials
/// seeded base+0, base+1, ...
Instance make_instance(ScenarioConfig const &config, std::uint64_t seed);

/// Generates the drop for (config, seed), runs one allocator on it and
/// records sum rate, UE1 SINR (dB) and revenue.  The random allocator
/// draws from derived seed 3*seed+2.  Deterministic per (config,
/// allocator, seed).
TrialResult run_trial(ScenarioConfig const &config, AllocatorKind allocator,
                      std::uint64_t seed, RicaParams const &params = {});

/// Sweeps the number of D2D pairs for one allocator.  Point (D, trial t)
/// uses seed base_seed + t, so seeds are shared across allocators and
/// across sweep points.  Trials run in parallel (see effective_threads);
/// results are sorted by (allocator, D, seed).
ExperimentResult sweep_d2d_count(ScenarioConfig const &config,
                                 AllocatorKind allocator,
                                 std::span<int const> d_values,
                                 int trials_per_point, std::uint64_t base_seed,
                                 RicaParams const &params = {},
                                 unsigned max_threads = 0);

/// Runs every named allocator on the same seeded drops (paired design) at
/// the config's D2D count.  Trial t of every allocator shares the
/// identical Instance.
ExperimentResult compare_allocators(ScenarioConfig const &config,
                                    std::span<AllocatorKind const> names,
                                    int trials, std::uint64_t base_seed,
                                    RicaParams const &params = {},
                                    unsigned max_threads = 0);

}  // namespace d2dsim
