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
#include <numbers>
#include <random>

namespace d2dsim {

/// Seeded random stream with fully specified variate transforms.
///
/// The engine is std::mt19937_64 (bit-exact across platforms by the
/// standard).  The standard library *distributions* are not, so the few
/// transforms this project needs are spelled out here; two runs with the
/// same seed produce the same draws on any conforming implementation.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01()
  {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).  n must be >= 1.
  std::size_t uniform_index(std::size_t n)
  {
    auto k = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

  /// Standard normal via Box-Muller (one draw consumed, one discarded).
  double normal()
  {
    double const u1 = uniform01();
    double const u2 = uniform01();
    double const r  = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Unit-mean exponential (inverse CDF).
  double exponential() { return -std::log1p(-uniform01()); }

  /// Uniform point in the disc of radius r around (cx, cy).
  void point_in_disc(double cx, double cy, double r, double &x, double &y)
  {
    double const rad   = r * std::sqrt(uniform01());
    double const theta = 2.0 * std::numbers::pi * uniform01();
    x = cx + rad * std::cos(theta);
    y = cy + rad * std::sin(theta);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace d2dsim
