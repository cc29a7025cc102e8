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

namespace d2dsim {

/// All physical-layer and drop-generation parameters for one scenario.
///
/// Defaults describe a single macro cell: 500 m radius, 46 dBm downlink,
/// 23 dBm device transmitters, -114 dBm thermal noise per resource,
/// 3.5 path-loss exponent and 8 dB log-normal shadowing.
struct ScenarioConfig
{
  double cell_radius_m      = 500.0;  ///< cell radius, BS at the origin
  int    num_cellular       = 4;      ///< cellular UEs == downlink resources
  int    num_d2d            = 8;      ///< D2D transmitter/receiver pairs
  double d2d_max_dist_m     = 20.0;   ///< max tx->rx separation of a pair
  double bs_power_dbm       = 46.0;
  double d2d_power_dbm      = 23.0;
  double noise_dbm          = -114.0;
  double pathloss_exp       = 3.5;
  double pathloss_const_db  = -30.0;  ///< reference loss at 1 m
  double shadowing_sigma_db = 8.0;
  bool   fading_enabled     = false;  ///< Rayleigh fast fading toggle
  double min_dist_m         = 1.0;    ///< distance clamp, avoids the r->0 pole
  std::uint64_t seed        = 1;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Transmit and noise powers in linear watts, derived from the dBm fields.
struct PowerProfile
{
  double bs_power_w  = 0.0;
  double d2d_power_w = 0.0;
  double noise_w     = 0.0;

  static PowerProfile from_config(ScenarioConfig const &cfg);

  bool operator==(PowerProfile const &) const = default;
};

/// 10^((dbm - 30) / 10)
double dbm_to_watts(double dbm);

/// 10 * log10(linear)
double linear_to_db(double linear);

}  // namespace d2dsim
