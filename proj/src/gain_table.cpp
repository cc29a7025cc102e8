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

#include "d2dsim/gain_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "d2dsim/rng.hpp"

namespace d2dsim {

GainTable build_gain_table(Topology const &topology, ScenarioConfig const &config,
                           std::uint64_t seed)
{
  config.validate();

  int const n = topology.num_nodes();
  GainTable table(n);
  Rng rng(seed);

  double const const_lin = std::pow(10.0, config.pathloss_const_db / 10.0);

  // One shadowing draw (and one fading draw) per unordered pair, consumed
  // in fixed (a, b) order so the table is reproducible per seed.
  for (int a = 0; a < n; ++a)
  {
    for (int b = a + 1; b < n; ++b)
    {
      double const d =
          std::max(distance(topology.node_pos(a), topology.node_pos(b)),
                   config.min_dist_m);
      double gain = const_lin * std::pow(d, -config.pathloss_exp);
      if (config.shadowing_sigma_db > 0.0)
      {
        double const shadow_db = rng.normal(0.0, config.shadowing_sigma_db);
        gain *= std::pow(10.0, shadow_db / 10.0);
      }
      if (config.fading_enabled)
      {
        gain *= rng.exponential();
      }
      // Gains are strictly positive by contract; a fading draw of exactly
      // zero (probability 2^-53) would break that.
      table.set(a, b, std::max(gain, std::numeric_limits<double>::min()));
    }
  }

  return table;
}

}  // namespace d2dsim
