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
#include <optional>
#include <span>
#include <vector>

#include "d2dsim/allocation.hpp"
#include "d2dsim/instance.hpp"

namespace d2dsim {

/// One bid: a resource (the bidder) asking for a D2D link at a price.
struct Bid
{
  int    link   = 0;
  double price  = 0.0;
  int    bidder = 0;

  bool operator==(Bid const &) const = default;
};

/// Clock parameters shared by both auction mechanisms.
struct RicaParams
{
  /// Opening clock price; 0 selects the automatic start, the maximum
  /// singleton package value on the empty allocation (floored at 0).
  double price_start = 0.0;
  /// Clock decrement per no-bid round, in rate units.
  double price_step = 0.05;
  /// Largest package a resource may bid on in one round.
  int package_cap = 2;
  /// Sum-rate auction only: stop instead of assigning a pair whose best
  /// marginal gain is negative.  Leaves the allocation incomplete, so it
  /// is off by default.
  bool skip_negative = false;

  void validate() const;
};

/// Per-round trace entry.  Rounds with no winner are price decrements;
/// fallback assignments are recorded as price-0 rounds without bids.
struct AuctionRound
{
  int index    = 0;
  double price = 0.0;
  std::vector<Bid> bids;
  std::optional<int> winner;  ///< winning resource, if any
  std::vector<int> package;   ///< links assigned this round, ascending

  bool operator==(AuctionRound const &) const = default;
};

/// Result of a full auction run: the (complete) allocation, the round
/// trace with non-increasing prices, the revenue collected and the final
/// sum rate of the allocation.
struct AuctionOutcome
{
  Allocation allocation;
  std::vector<AuctionRound> rounds;
  double revenue        = 0.0;
  double final_sum_rate = 0.0;

  bool operator==(AuctionOutcome const &) const = default;
};

/// Assigns every pair to a uniformly random resource, i.i.d. per pair.
/// Deterministic per seed.
Allocation allocate_random(Instance const &inst, std::uint64_t seed);

/// Package value v_c(S): the sum-rate delta from assigning every pair of S
/// to resource c on top of alloc.  Value and price share the same unit
/// (1 rate unit = 1 monetary unit).  UsageError if a pair of S is already
/// assigned.
double rica_value(Instance const &inst, Allocation const &alloc, int resource,
                  std::span<int const> package);

/// Reverse iterative combinatorial auction under a descending price clock.
///
/// Each round every resource proposes its best package S of unassigned
/// pairs (|S| <= package_cap) by utility u = v_c(S) - p * |S|.  The
/// highest-utility bidder with u >= 0 wins and its pairs are assigned at
/// price p each; rounds with no bid decrement the clock.  When the clock
/// stalls at zero with pairs left, the remaining pairs are force-assigned
/// one by one to their best-marginal-gain resource at price 0, so the
/// returned allocation is always complete.  Ties break towards the lowest
/// resource index, then the lexicographically smallest package.
AuctionOutcome allocate_rica(Instance const &inst, RicaParams const &params = {});

/// Sum-rate-maximizing auction: D rounds, each assigning the (pair,
/// resource) candidate with the highest marginal sum-rate gain on the
/// current allocation, even when that gain is negative (every link is
/// auctioned).  Bids at the running clock price are generated and recorded
/// but never influence the winner.  Ties break towards the lowest pair
/// index, then the lowest resource index.
AuctionOutcome allocate_new_auction(Instance const &inst,
                                    RicaParams const &params = {});

/// Exhaustive search over all C^D complete allocations; returns one with
/// maximum sum rate (ties: lexicographically smallest assignment vector).
/// InstanceTooLargeError when C^D exceeds 10^6.
Allocation allocate_exhaustive(Instance const &inst);

}  // namespace d2dsim
