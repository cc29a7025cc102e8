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

#include "d2dsim/config.hpp"
#include "d2dsim/gain_table.hpp"
#include "d2dsim/topology.hpp"

namespace d2dsim {

/// One network drop bundled for the allocators: positions, channel gains
/// and transmit powers, immutable once built.
struct Instance
{
  Topology topology;
  GainTable gains;
  PowerProfile powers;
  int num_cellular = 0;
  int num_d2d      = 0;

  int bs_node() const { return topology.bs_node(); }
  int cellular_node(int i) const { return topology.cellular_node(i); }
  int d2d_tx_node(int k) const { return topology.d2d_tx_node(k); }
  int d2d_rx_node(int k) const { return topology.d2d_rx_node(k); }
};

}  // namespace d2dsim
