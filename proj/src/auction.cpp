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

#include "d2dsim/auction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "d2dsim/link_metrics.hpp"
#include "d2dsim/rng.hpp"

namespace d2dsim {

namespace {

void check_feasible(Instance const &inst)
{
  if (inst.num_cellular < 1 && inst.num_d2d > 0)
  {
    throw InfeasibleInstanceError(
        "no resources to share: num_cellular is 0 but num_d2d is " +
        std::to_string(inst.num_d2d));
  }
}

std::vector<int> unassigned_pairs(Allocation const &alloc)
{
  std::vector<int> pairs;
  for (int d = 0; d < alloc.num_pairs(); ++d)
  {
    if (!alloc.is_assigned(d))
    {
      pairs.push_back(d);
    }
  }
  return pairs;
}

double value_of_package(Instance const &inst, Allocation const &alloc,
                        double base_rate, int resource,
                        std::span<int const> package)
{
  Allocation with = alloc;
  for (int d : package)
  {
    with.assign(d, resource);
  }
  return sum_rate(inst, with) - base_rate;
}

/// Best package of a single resource at clock price p.  Packages are
/// visited in lexicographic order over ascending pair indices, so keeping
/// the first strict maximum realizes the smallest-package tie-break.
struct PackageBid
{
  std::vector<int> package;
  double value   = 0.0;
  double utility = 0.0;
};

std::optional<PackageBid> best_package(Instance const &inst,
                                       Allocation const &alloc, double base_rate,
                                       int resource,
                                       std::vector<int> const &candidates,
                                       int package_cap, double price)
{
  std::optional<PackageBid> best;
  std::vector<int> current;

  auto consider = [&]() {
    double const value =
        value_of_package(inst, alloc, base_rate, resource, current);
    double const utility = value - price * static_cast<double>(current.size());
    if (utility >= 0.0 && (!best || utility > best->utility))
    {
      best = PackageBid{current, value, utility};
    }
  };

  // Depth-first lexicographic enumeration of nonempty subsets up to the cap.
  auto recurse = [&](auto &&self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) >= package_cap)
    {
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i)
    {
      current.push_back(candidates[i]);
      consider();
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);

  return best;
}

/// Highest marginal gain (pair, resource) on the current allocation; ties
/// towards lowest pair index, then lowest resource index.
struct Candidate
{
  int pair     = -1;
  int resource = -1;
  double gain  = 0.0;
};

std::optional<Candidate> best_candidate(Instance const &inst,
                                        Allocation const &alloc,
                                        double base_rate)
{
  std::optional<Candidate> best;
  for (int d = 0; d < inst.num_d2d; ++d)
  {
    if (alloc.is_assigned(d))
    {
      continue;
    }
    for (int c = 0; c < inst.num_cellular; ++c)
    {
      Allocation with = alloc;
      with.assign(d, c);
      double const gain = sum_rate(inst, with) - base_rate;
      if (!best || gain > best->gain)
      {
        best = Candidate{d, c, gain};
      }
    }
  }
  return best;
}

/// Opening clock price: the best singleton value on the empty allocation,
/// floored at zero.
double auto_price_start(Instance const &inst)
{
  Allocation const empty(inst.num_d2d);
  double const base = sum_rate(inst, empty);
  double start = 0.0;
  for (int d = 0; d < inst.num_d2d; ++d)
  {
    for (int c = 0; c < inst.num_cellular; ++c)
    {
      Allocation with = empty;
      with.assign(d, c);
      start = std::max(start, sum_rate(inst, with) - base);
    }
  }
  return start;
}

double resolve_price_start(Instance const &inst, RicaParams const &params)
{
  return params.price_start > 0.0 ? params.price_start : auto_price_start(inst);
}

}  // namespace

void RicaParams::validate() const
{
  if (!(price_step > 0.0))
  {
    throw ConfigError("price_step must be > 0 (got " + std::to_string(price_step) +
                      ")");
  }
  if (package_cap < 1)
  {
    throw ConfigError("package_cap must be >= 1 (got " +
                      std::to_string(package_cap) + ")");
  }
  if (price_start < 0.0)
  {
    throw ConfigError("price_start must be >= 0 (got " +
                      std::to_string(price_start) + ")");
  }
}

Allocation allocate_random(Instance const &inst, std::uint64_t seed)
{
  check_feasible(inst);

  Rng rng(seed);
  Allocation alloc(inst.num_d2d);
  for (int d = 0; d < inst.num_d2d; ++d)
  {
    alloc.assign(d, static_cast<int>(rng.uniform_index(
                        static_cast<std::size_t>(inst.num_cellular))));
  }
  return alloc;
}

double rica_value(Instance const &inst, Allocation const &alloc, int resource,
                  std::span<int const> package)
{
  for (int d : package)
  {
    if (alloc.is_assigned(d))
    {
      throw UsageError("pair " + std::to_string(d) + " is already assigned");
    }
  }
  return value_of_package(inst, alloc, sum_rate(inst, alloc), resource, package);
}

AuctionOutcome allocate_rica(Instance const &inst, RicaParams const &params)
{
  params.validate();
  check_feasible(inst);

  AuctionOutcome outcome;
  outcome.allocation = Allocation(inst.num_d2d);
  Allocation &alloc  = outcome.allocation;

  double price    = resolve_price_start(inst, params);
  int round_index = 0;

  while (!alloc.is_complete())
  {
    double const base       = sum_rate(inst, alloc);
    auto const   candidates = unassigned_pairs(alloc);

    // Every resource proposes its best package; collect the round's bids.
    std::optional<int> winner;
    PackageBid winning_bid;
    std::vector<Bid> bids;
    for (int c = 0; c < inst.num_cellular; ++c)
    {
      auto const proposal = best_package(inst, alloc, base, c, candidates,
                                         params.package_cap, price);
      if (!proposal)
      {
        continue;
      }
      for (int link : proposal->package)
      {
        bids.push_back(Bid{link, price, c});
      }
      if (!winner || proposal->utility > winning_bid.utility)
      {
        winner      = c;
        winning_bid = *proposal;
      }
    }

    if (winner)
    {
      for (int d : winning_bid.package)
      {
        alloc.assign(d, *winner);
      }
      outcome.revenue +=
          price * static_cast<double>(winning_bid.package.size());
      outcome.rounds.push_back(AuctionRound{round_index, price, std::move(bids),
                                            winner, winning_bid.package});
    }
    else if (price > 0.0)
    {
      outcome.rounds.push_back(
          AuctionRound{round_index, price, std::move(bids), std::nullopt, {}});
      price = std::max(0.0, price - params.price_step);
    }
    else
    {
      // Clock stalled at zero: force-assign the remaining pairs, one per
      // round, to their best-marginal-gain resource.
      for (int d : candidates)
      {
        double const current_base = sum_rate(inst, alloc);
        int best_c                = 0;
        double best_gain          = 0.0;
        for (int c = 0; c < inst.num_cellular; ++c)
        {
          Allocation with = alloc;
          with.assign(d, c);
          double const gain = sum_rate(inst, with) - current_base;
          if (c == 0 || gain > best_gain)
          {
            best_c    = c;
            best_gain = gain;
          }
        }
        alloc.assign(d, best_c);
        outcome.rounds.push_back(
            AuctionRound{round_index, 0.0, {}, best_c, {d}});
        ++round_index;
      }
      break;
    }
    ++round_index;
  }

  outcome.final_sum_rate = sum_rate(inst, alloc);
  return outcome;
}

AuctionOutcome allocate_new_auction(Instance const &inst,
                                    RicaParams const &params)
{
  params.validate();
  check_feasible(inst);

  AuctionOutcome outcome;
  outcome.allocation = Allocation(inst.num_d2d);
  Allocation &alloc  = outcome.allocation;

  double price = resolve_price_start(inst, params);

  for (int round_index = 0; round_index < inst.num_d2d; ++round_index)
  {
    double const base = sum_rate(inst, alloc);

    // Bids are recorded for the trace only; winner selection below never
    // reads them.
    std::vector<Bid> bids;
    for (int c = 0; c < inst.num_cellular; ++c)
    {
      int best_link    = -1;
      double best_gain = 0.0;
      for (int d = 0; d < inst.num_d2d; ++d)
      {
        if (alloc.is_assigned(d))
        {
          continue;
        }
        Allocation with = alloc;
        with.assign(d, c);
        double const gain = sum_rate(inst, with) - base;
        if (best_link < 0 || gain > best_gain)
        {
          best_link = d;
          best_gain = gain;
        }
      }
      bids.push_back(Bid{best_link, price, c});
    }

    auto const chosen = best_candidate(inst, alloc, base);
    if (params.skip_negative && chosen->gain < 0.0)
    {
      break;
    }
    alloc.assign(chosen->pair, chosen->resource);
    outcome.revenue += price;
    outcome.rounds.push_back(AuctionRound{round_index, price, std::move(bids),
                                          chosen->resource, {chosen->pair}});
    price = std::max(0.0, price - params.price_step);
  }

  outcome.final_sum_rate = sum_rate(inst, alloc);
  return outcome;
}

Allocation allocate_exhaustive(Instance const &inst)
{
  check_feasible(inst);

  int const c = inst.num_cellular;
  int const d = inst.num_d2d;

  double space = 1.0;
  for (int k = 0; k < d; ++k)
  {
    space *= static_cast<double>(c);
    if (space > 1e6)
    {
      throw InstanceTooLargeError(
          "exhaustive search space " + std::to_string(c) + "^" +
          std::to_string(d) + " exceeds the 10^6 guard");
    }
  }

  Allocation best(d);
  if (d == 0)
  {
    return best;
  }

  // Walk assignment vectors in lexicographic order; keeping strict
  // improvements only makes the first maximum, i.e. the lexicographically
  // smallest one, the winner.
  std::vector<int> digits(static_cast<std::size_t>(d), 0);
  double best_rate = -1.0;
  while (true)
  {
    Allocation candidate(d);
    for (int k = 0; k < d; ++k)
    {
      candidate.assign(k, digits[static_cast<std::size_t>(k)]);
    }
    double const rate = sum_rate(inst, candidate);
    if (rate > best_rate)
    {
      best_rate = rate;
      best      = candidate;
    }

    int pos = d - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == c - 1)
    {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0)
    {
      break;
    }
    ++digits[static_cast<std::size_t>(pos)];
  }

  return best;
}

}  // namespace d2dsim
