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

#include <cmath>
#include <cstdint>
#include <vector>

#include "d2dsim/config.hpp"

namespace d2dsim {

struct Vec2
{
  double x = 0.0;
  double y = 0.0;

  bool operator==(Vec2 const &) const = default;
};

inline double distance(Vec2 a, Vec2 b)
{
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Node positions of one network drop.  The BS sits at the origin; every
/// other node lies inside the cell and each D2D receiver within
/// d2d_max_dist_m of its transmitter.
///
/// Nodes are indexed globally: 0 is the BS, [1, 1+C) the cellular UEs,
/// [1+C, 1+C+D) the D2D transmitters, [1+C+D, 1+C+2D) the D2D receivers.
struct Topology
{
  Vec2 bs_pos{0.0, 0.0};
  std::vector<Vec2> cellular_pos;
  std::vector<Vec2> d2d_tx_pos;
  std::vector<Vec2> d2d_rx_pos;

  int num_cellular() const { return static_cast<int>(cellular_pos.size()); }
  int num_d2d() const { return static_cast<int>(d2d_tx_pos.size()); }
  int num_nodes() const { return 1 + num_cellular() + 2 * num_d2d(); }

  int bs_node() const { return 0; }
  int cellular_node(int i) const { return 1 + i; }
  int d2d_tx_node(int k) const { return 1 + num_cellular() + k; }
  int d2d_rx_node(int k) const { return 1 + num_cellular() + num_d2d() + k; }

  Vec2 node_pos(int node) const;

  bool operator==(Topology const &) const = default;
};

/// Draws one random drop: cellular UEs and D2D transmitters uniform in the
/// cell disc, each receiver uniform in the disc of radius d2d_max_dist_m
/// around its transmitter (re-drawn until inside the cell).  Deterministic
/// for a fixed seed.
Topology generate_topology(ScenarioConfig const &config, std::uint64_t seed);

}  // namespace d2dsim
