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

#include "d2dsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>
#include <vector>

#include "d2dsim/errors.hpp"
#include "d2dsim/link_metrics.hpp"

namespace d2dsim {

namespace {

/// Runs task(0..n-1) on up to `threads` workers.  Tasks write into
/// preallocated slots, so the result order is schedule-independent.  The
/// first task exception, if any, is rethrown on the caller thread.
void parallel_for(std::size_t n, unsigned threads,
                  std::function<void(std::size_t)> const &task)
{
  if (n == 0)
  {
    return;
  }
  unsigned const workers =
      std::min<unsigned>(threads, static_cast<unsigned>(n));
  if (workers <= 1)
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      task(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (true)
    {
      std::size_t const i = next.fetch_add(1);
      if (i >= n || failed.load())
      {
        return;
      }
      try
      {
        task(i);
      }
      catch (...)
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true))
        {
          error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
  {
    pool.emplace_back(worker);
  }
  for (auto &t : pool)
  {
    t.join();
  }
  if (error)
  {
    std::rethrow_exception(error);
  }
}

void sort_trials(std::vector<TrialResult> &trials)
{
  std::stable_sort(trials.begin(), trials.end(),
                   [](TrialResult const &a, TrialResult const &b) {
                     return std::tie(a.allocator, a.num_d2d, a.seed) <
                            std::tie(b.allocator, b.num_d2d, b.seed);
                   });
}

}  // namespace

AllocatorKind parse_allocator_name(std::string_view name)
{
  if (name == "random")
  {
    return AllocatorKind::Random;
  }
  if (name == "rica")
  {
    return AllocatorKind::Rica;
  }
  if (name == "new-auction")
  {
    return AllocatorKind::NewAuction;
  }
  if (name == "exhaustive")
  {
    return AllocatorKind::Exhaustive;
  }
  throw UsageError("unknown allocator '" + std::string(name) +
                   "' (expected random, rica, new-auction or exhaustive)");
}

std::string_view allocator_name(AllocatorKind kind)
{
  switch (kind)
  {
  case AllocatorKind::Random:
    return "random";
  case AllocatorKind::Rica:
    return "rica";
  case AllocatorKind::NewAuction:
    return "new-auction";
  case AllocatorKind::Exhaustive:
    return "exhaustive";
  }
  throw UsageError("invalid allocator kind");
}

unsigned effective_threads(unsigned max_threads)
{
  if (max_threads > 0)
  {
    return max_threads;
  }
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (char const *env = std::getenv("D2DSIM_THREADS"))
  {
    unsigned long const cap = std::strtoul(env, nullptr, 10);
    if (cap >= 1)
    {
      threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
    }
  }
  return threads;
}

Instance make_instance(ScenarioConfig const &config, std::uint64_t seed)
{
  config.validate();

  Instance inst;
  inst.topology     = generate_topology(config, 3 * seed);
  inst.gains        = build_gain_table(inst.topology, config, 3 * seed + 1);
  inst.powers       = PowerProfile::from_config(config);
  inst.num_cellular = config.num_cellular;
  inst.num_d2d      = config.num_d2d;
  return inst;
}

TrialResult run_trial(ScenarioConfig const &config, AllocatorKind allocator,
                      std::uint64_t seed, RicaParams const &params)
{
  config.validate();
  if (config.num_cellular < 1)
  {
    throw ConfigError("num_cellular must be >= 1 to run a trial (got " +
                      std::to_string(config.num_cellular) + ")");
  }

  Instance const inst = make_instance(config, seed);

  TrialResult result;
  result.seed         = seed;
  result.allocator    = std::string(allocator_name(allocator));
  result.num_cellular = config.num_cellular;
  result.num_d2d      = config.num_d2d;

  auto const start = std::chrono::steady_clock::now();
  Allocation alloc;
  switch (allocator)
  {
  case AllocatorKind::Random:
    alloc = allocate_random(inst, 3 * seed + 2);
    break;
  case AllocatorKind::Rica:
  {
    AuctionOutcome outcome = allocate_rica(inst, params);
    result.revenue         = outcome.revenue;
    alloc                  = std::move(outcome.allocation);
    break;
  }
  case AllocatorKind::NewAuction:
  {
    AuctionOutcome outcome = allocate_new_auction(inst, params);
    result.revenue         = outcome.revenue;
    alloc                  = std::move(outcome.allocation);
    break;
  }
  case AllocatorKind::Exhaustive:
    alloc = allocate_exhaustive(inst);
    break;
  }
  auto const stop = std::chrono::steady_clock::now();

  result.runtime_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  result.sum_rate    = sum_rate(inst, alloc);
  result.ue1_sinr_db = linear_to_db(sinr_cellular(inst, alloc, 0));
  return result;
}

ExperimentResult sweep_d2d_count(ScenarioConfig const &config,
                                 AllocatorKind allocator,
                                 std::span<int const> d_values,
                                 int trials_per_point, std::uint64_t base_seed,
                                 RicaParams const &params, unsigned max_threads)
{
  if (d_values.empty())
  {
    throw UsageError("d_values must not be empty");
  }
  if (trials_per_point < 1)
  {
    throw UsageError("trials_per_point must be >= 1 (got " +
                     std::to_string(trials_per_point) + ")");
  }

  ExperimentResult result;
  result.base_config = config;
  result.trials.resize(d_values.size() *
                       static_cast<std::size_t>(trials_per_point));

  auto const trials_per = static_cast<std::size_t>(trials_per_point);
  parallel_for(result.trials.size(), effective_threads(max_threads),
               [&](std::size_t i) {
                 std::size_t const point = i / trials_per;
                 std::size_t const trial = i % trials_per;
                 ScenarioConfig point_config = config;
                 point_config.num_d2d        = d_values[point];
                 result.trials[i] = run_trial(point_config, allocator,
                                              base_seed + trial, params);
               });

  sort_trials(result.trials);
  return result;
}

ExperimentResult compare_allocators(ScenarioConfig const &config,
                                    std::span<AllocatorKind const> names,
                                    int trials, std::uint64_t base_seed,
                                    RicaParams const &params,
                                    unsigned max_threads)
{
  if (names.empty())
  {
    throw UsageError("allocator list must not be empty");
  }
  if (trials < 1)
  {
    throw UsageError("trials must be >= 1 (got " + std::to_string(trials) + ")");
  }

  ExperimentResult result;
  result.base_config = config;
  result.trials.resize(names.size() * static_cast<std::size_t>(trials));

  // One task per seed: the instance is built once and every allocator runs
  // on it, which makes the pairing bit-identical by construction.
  auto const n_alloc = names.size();
  parallel_for(static_cast<std::size_t>(trials), effective_threads(max_threads),
               [&](std::size_t t) {
                 for (std::size_t a = 0; a < n_alloc; ++a)
                 {
                   result.trials[t * n_alloc + a] =
                       run_trial(config, names[a], base_seed + t, params);
                 }
               });

  sort_trials(result.trials);
  return result;
}

}  // namespace d2dsim
