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
#include <vector>

#include "d2dsim/config.hpp"
#include "d2dsim/topology.hpp"

namespace d2dsim {

/// Symmetric linear power gains between node pairs, keyed by the global
/// node index of Topology.  gain(a, b) == gain(b, a) always; gains are
/// finite and strictly positive.
class GainTable
{
public:
  GainTable() = default;
  explicit GainTable(int num_nodes)
    : num_nodes_(num_nodes)
    , gain_(static_cast<std::size_t>(num_nodes) * num_nodes, 0.0)
  {}

  double at(int a, int b) const
  {
    return gain_[static_cast<std::size_t>(a) * num_nodes_ + b];
  }

  /// Stores g for both directions of {a, b}.
  void set(int a, int b, double g)
  {
    gain_[static_cast<std::size_t>(a) * num_nodes_ + b] = g;
    gain_[static_cast<std::size_t>(b) * num_nodes_ + a] = g;
  }

  int num_nodes() const { return num_nodes_; }

  bool operator==(GainTable const &) const = default;

private:
  int num_nodes_ = 0;
  std::vector<double> gain_;
};

/// Channel gain for every unordered node pair:
///
///   gain = 10^(pathloss_const_db/10) * max(d, min_dist_m)^(-pathloss_exp)
///        * 10^(S/10),   S ~ Normal(0, shadowing_sigma_db^2)
///
/// with one shadowing draw per unordered pair, times an independent
/// unit-mean exponential draw per pair when fading is enabled.
/// Deterministic for a fixed seed.
GainTable build_gain_table(Topology const &topology, ScenarioConfig const &config,
                           std::uint64_t seed);

}  // namespace d2dsim
