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

#include "d2dsim/link_metrics.hpp"

#include <cmath>
#include <string>

namespace d2dsim {

double sinr_cellular(Instance const &inst, Allocation const &alloc, int ue)
{
  if (ue < 0 || ue >= inst.num_cellular)
  {
    throw UsageError("cellular index " + std::to_string(ue) + " out of range");
  }

  int const ue_node = inst.cellular_node(ue);
  double const signal =
      inst.powers.bs_power_w * inst.gains.at(inst.bs_node(), ue_node);

  double interference = 0.0;
  for (int d = 0; d < inst.num_d2d; ++d)
  {
    if (alloc.is_assigned(d) && alloc.resource_of(d) == ue)
    {
      interference += inst.powers.d2d_power_w *
                      inst.gains.at(inst.d2d_tx_node(d), ue_node);
    }
  }

  return signal / (inst.powers.noise_w + interference);
}

double sinr_d2d(Instance const &inst, Allocation const &alloc, int pair)
{
  int const resource = alloc.resource_of(pair);  // throws if unassigned

  int const rx_node = inst.d2d_rx_node(pair);
  double const signal =
      inst.powers.d2d_power_w * inst.gains.at(inst.d2d_tx_node(pair), rx_node);

  // The BS transmits on every downlink resource, so it always interferes.
  double interference =
      inst.powers.bs_power_w * inst.gains.at(inst.bs_node(), rx_node);
  for (int other = 0; other < inst.num_d2d; ++other)
  {
    if (other != pair && alloc.is_assigned(other) &&
        alloc.resource_of(other) == resource)
    {
      interference += inst.powers.d2d_power_w *
                      inst.gains.at(inst.d2d_tx_node(other), rx_node);
    }
  }

  return signal / (inst.powers.noise_w + interference);
}

double shannon_rate(double sinr)
{
  return std::log2(1.0 + sinr);
}

double sum_rate(Instance const &inst, Allocation const &alloc)
{
  double total = 0.0;
  for (int i = 0; i < inst.num_cellular; ++i)
  {
    total += shannon_rate(sinr_cellular(inst, alloc, i));
  }
  for (int d = 0; d < inst.num_d2d; ++d)
  {
    if (alloc.is_assigned(d))
    {
      total += shannon_rate(sinr_d2d(inst, alloc, d));
    }
  }
  return total;
}

double marginal_gain(Instance const &inst, Allocation const &alloc, int pair,
                     int resource)
{
  if (alloc.is_assigned(pair))
  {
    throw UsageError("pair " + std::to_string(pair) + " is already assigned");
  }

  double const before = sum_rate(inst, alloc);
  Allocation with = alloc;
  with.assign(pair, resource);
  return sum_rate(inst, with) - before;
}

}  // namespace d2dsim
