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

#include "d2dsim/topology.hpp"

#include "d2dsim/errors.hpp"
#include "d2dsim/rng.hpp"

namespace d2dsim {

Vec2 Topology::node_pos(int node) const
{
  if (node == 0)
  {
    return bs_pos;
  }
  int const c = num_cellular();
  int const d = num_d2d();
  if (node < 1 + c)
  {
    return cellular_pos[node - 1];
  }
  if (node < 1 + c + d)
  {
    return d2d_tx_pos[node - 1 - c];
  }
  if (node < 1 + c + 2 * d)
  {
    return d2d_rx_pos[node - 1 - c - d];
  }
  throw UsageError("node index out of range");
}

Topology generate_topology(ScenarioConfig const &config, std::uint64_t seed)
{
  config.validate();

  Rng rng(seed);
  Topology topo;
  topo.cellular_pos.reserve(config.num_cellular);
  topo.d2d_tx_pos.reserve(config.num_d2d);
  topo.d2d_rx_pos.reserve(config.num_d2d);

  for (int i = 0; i < config.num_cellular; ++i)
  {
    Vec2 p;
    rng.point_in_disc(0.0, 0.0, config.cell_radius_m, p.x, p.y);
    topo.cellular_pos.push_back(p);
  }

  for (int k = 0; k < config.num_d2d; ++k)
  {
    Vec2 tx;
    rng.point_in_disc(0.0, 0.0, config.cell_radius_m, tx.x, tx.y);
    topo.d2d_tx_pos.push_back(tx);

    // Rejection-sample the receiver until it lands inside the cell.
    Vec2 rx;
    do
    {
      rng.point_in_disc(tx.x, tx.y, config.d2d_max_dist_m, rx.x, rx.y);
    } while (distance(rx, topo.bs_pos) > config.cell_radius_m);
    topo.d2d_rx_pos.push_back(rx);
  }

  return topo;
}

}  // namespace d2dsim
