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

#include <cmath>
#include <string>

#include "d2dsim/errors.hpp"

namespace d2dsim {

namespace {

void require(bool ok, char const *constraint, double got)
{
  if (!ok)
  {
    throw ConfigError(std::string(constraint) + " (got " + std::to_string(got) + ")");
  }
}

}  // namespace

void ScenarioConfig::validate() const
{
  require(cell_radius_m > 0.0, "cell_radius_m must be > 0", cell_radius_m);
  require(num_cellular >= 0, "num_cellular must be >= 0", num_cellular);
  require(num_d2d >= 0, "num_d2d must be >= 0", num_d2d);
  require(num_d2d == 0 || num_cellular >= 1,
          "num_cellular must be >= 1 when num_d2d >= 1", num_cellular);
  require(d2d_max_dist_m > 0.0, "d2d_max_dist_m must be > 0", d2d_max_dist_m);
  require(pathloss_exp > 0.0, "pathloss_exp must be > 0", pathloss_exp);
  require(shadowing_sigma_db >= 0.0, "shadowing_sigma_db must be >= 0",
          shadowing_sigma_db);
  require(min_dist_m > 0.0, "min_dist_m must be > 0", min_dist_m);
  require(std::isfinite(bs_power_dbm), "bs_power_dbm must be finite", bs_power_dbm);
  require(std::isfinite(d2d_power_dbm), "d2d_power_dbm must be finite", d2d_power_dbm);
  require(std::isfinite(noise_dbm), "noise_dbm must be finite", noise_dbm);
  require(std::isfinite(pathloss_const_db), "pathloss_const_db must be finite",
          pathloss_const_db);
}

double dbm_to_watts(double dbm)
{
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double linear_to_db(double linear)
{
  return 10.0 * std::log10(linear);
}

PowerProfile PowerProfile::from_config(ScenarioConfig const &cfg)
{
  return {dbm_to_watts(cfg.bs_power_dbm), dbm_to_watts(cfg.d2d_power_dbm),
          dbm_to_watts(cfg.noise_dbm)};
}

}  // namespace d2dsim
