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
#include <limits>
#include <vector>

#include "doctest.h"

#include "d2dsim/config.hpp"
#include "d2dsim/errors.hpp"
#include "d2dsim/gain_table.hpp"
#include "d2dsim/harness.hpp"
#include "d2dsim/link_metrics.hpp"
#include "d2dsim/rng.hpp"
#include "d2dsim/topology.hpp"
#include "oracles.hpp"

using namespace d2dsim;

TEST_CASE("config defaults validate and power conversion is exact")
{
  ScenarioConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(dbm_to_watts(-114.0) ==
        doctest::Approx(std::pow(10.0, -14.4)).epsilon(1e-12));

  PowerProfile const p = PowerProfile::from_config(cfg);
  CHECK(p.bs_power_w > 0.0);
  CHECK(p.d2d_power_w > 0.0);
  CHECK(p.noise_w > 0.0);
  CHECK(p.bs_power_w == doctest::Approx(dbm_to_watts(46.0)));
}

TEST_CASE("config validation rejects out-of-range fields naming them")
{
  auto expect_error = [](ScenarioConfig const &cfg, char const *field) {
    try
    {
      cfg.validate();
      FAIL_CHECK("expected ConfigError for ", field);
    }
    catch (ConfigError const &e)
    {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };

  ScenarioConfig cfg;
  cfg.cell_radius_m = 0.0;
  expect_error(cfg, "cell_radius_m");

  cfg               = ScenarioConfig{};
  cfg.d2d_max_dist_m = -1.0;
  expect_error(cfg, "d2d_max_dist_m");

  cfg              = ScenarioConfig{};
  cfg.num_cellular = 0;
  cfg.num_d2d      = 1;
  expect_error(cfg, "num_cellular");

  cfg              = ScenarioConfig{};
  cfg.pathloss_exp = -1.0;
  expect_error(cfg, "pathloss_exp");

  cfg                    = ScenarioConfig{};
  cfg.shadowing_sigma_db = -0.5;
  expect_error(cfg, "shadowing_sigma_db");

  cfg            = ScenarioConfig{};
  cfg.min_dist_m = 0.0;
  expect_error(cfg, "min_dist_m");

  // C = 0 is fine as long as there are no pairs to serve.
  cfg              = ScenarioConfig{};
  cfg.num_cellular = 0;
  cfg.num_d2d      = 0;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("rng streams are deterministic and match their declared laws")
{
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i)
  {
    CHECK(a.uniform01() == b.uniform01());
  }

  Rng r(7);
  int const n = 10000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i)
  {
    double const u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sq += u * u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.03));

  double nsum = 0.0, nsq = 0.0;
  for (int i = 0; i < n; ++i)
  {
    double const x = r.normal();
    nsum += x;
    nsq += x * x;
  }
  CHECK(std::abs(nsum / n) < 0.05);
  CHECK(std::sqrt(nsq / n) == doctest::Approx(1.0).epsilon(0.05));

  double esum = 0.0;
  for (int i = 0; i < n; ++i)
  {
    double const x = r.exponential();
    CHECK(x >= 0.0);
    esum += x;
  }
  CHECK(esum / n == doctest::Approx(1.0).epsilon(0.05));

  for (int i = 0; i < 1000; ++i)
  {
    double x = 0.0, y = 0.0;
    r.point_in_disc(3.0, -2.0, 5.0, x, y);
    CHECK(std::hypot(x - 3.0, y + 2.0) <= 5.0);
  }
}

TEST_CASE("topology: empty case, invariants, determinism")
{
  ScenarioConfig cfg;

  SUBCASE("C=0, D=0 leaves only the BS at the origin")
  {
    cfg.num_cellular = 0;
    cfg.num_d2d      = 0;
    Topology const t = generate_topology(cfg, 1);
    CHECK(t.bs_pos == Vec2{0.0, 0.0});
    CHECK(t.cellular_pos.empty());
    CHECK(t.d2d_tx_pos.empty());
    CHECK(t.d2d_rx_pos.empty());
    CHECK(t.num_nodes() == 1);
  }

  SUBCASE("all positions in the cell, pair separations within range")
  {
    cfg.num_cellular = 4;
    cfg.num_d2d      = 10;
    Topology const t = generate_topology(cfg, 1);
    REQUIRE(t.num_cellular() == 4);
    REQUIRE(t.num_d2d() == 10);
    for (int node = 0; node < t.num_nodes(); ++node)
    {
      CHECK(distance(t.node_pos(node), Vec2{0.0, 0.0}) <= cfg.cell_radius_m);
    }
    for (int k = 0; k < 10; ++k)
    {
      CHECK(distance(t.d2d_tx_pos[k], t.d2d_rx_pos[k]) <= cfg.d2d_max_dist_m);
    }
  }

  SUBCASE("same seed reproduces, different seed varies")
  {
    cfg.num_d2d = 6;
    CHECK(generate_topology(cfg, 9) == generate_topology(cfg, 9));
    CHECK_FALSE(generate_topology(cfg, 9) == generate_topology(cfg, 10));
  }

  SUBCASE("invalid config is rejected with the field name")
  {
    cfg.cell_radius_m = -5.0;
    CHECK_THROWS_AS(generate_topology(cfg, 1), ConfigError);
  }
}

namespace {

/// Two-node topology at an exact distance, for closed-form gain checks.
Topology two_node_topology(double d)
{
  Topology t;
  t.cellular_pos = {Vec2{d, 0.0}};
  return t;
}

}  // namespace

TEST_CASE("gain formula at reference distances (no shadowing)")
{
  ScenarioConfig cfg;
  cfg.num_cellular       = 1;
  cfg.num_d2d            = 0;
  cfg.shadowing_sigma_db = 0.0;

  SUBCASE("1 m reference: gain = 1.0e-3")
  {
    GainTable const g = build_gain_table(two_node_topology(1.0), cfg, 3);
    CHECK(g.at(0, 1) == doctest::Approx(1.0e-3).epsilon(1e-12));
  }

  SUBCASE("10 m: gain = 1e-3 * 10^-3.5")
  {
    GainTable const g = build_gain_table(two_node_topology(10.0), cfg, 3);
    CHECK(g.at(0, 1) ==
          doctest::Approx(1.0e-3 * std::pow(10.0, -3.5)).epsilon(1e-12));
    CHECK(g.at(0, 1) == doctest::Approx(3.1623e-7).epsilon(1e-4));
  }

  SUBCASE("distances below min_dist_m are clamped")
  {
    GainTable const at_min  = build_gain_table(two_node_topology(1.0), cfg, 3);
    GainTable const clamped = build_gain_table(two_node_topology(0.1), cfg, 3);
    CHECK(clamped.at(0, 1) == at_min.at(0, 1));
  }
}

TEST_CASE("shadowing draws match the declared normal law")
{
  // 143 nodes give 10153 unordered pairs, one shadowing draw each.
  ScenarioConfig cfg;
  cfg.num_cellular = 142;
  cfg.num_d2d      = 0;

  Topology const t  = generate_topology(cfg, 5);
  GainTable const g = build_gain_table(t, cfg, 6);

  double const const_lin = std::pow(10.0, cfg.pathloss_const_db / 10.0);
  std::vector<double> shadow_db;
  for (int a = 0; a < t.num_nodes(); ++a)
  {
    for (int b = a + 1; b < t.num_nodes(); ++b)
    {
      double const d =
          std::max(distance(t.node_pos(a), t.node_pos(b)), cfg.min_dist_m);
      double const pathloss = const_lin * std::pow(d, -cfg.pathloss_exp);
      shadow_db.push_back(10.0 * std::log10(g.at(a, b) / pathloss));
    }
  }
  REQUIRE(shadow_db.size() > 10000);

  double sum = 0.0;
  for (double s : shadow_db)
  {
    sum += s;
  }
  double const mean = sum / static_cast<double>(shadow_db.size());
  double var = 0.0;
  for (double s : shadow_db)
  {
    var += (s - mean) * (s - mean);
  }
  var /= static_cast<double>(shadow_db.size());

  CHECK(std::abs(mean) < 0.3);
  CHECK(std::sqrt(var) == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("gain table symmetry, positivity and determinism")
{
  ScenarioConfig cfg;
  cfg.num_cellular = 3;
  cfg.num_d2d      = 5;

  Topology const t  = generate_topology(cfg, 11);
  GainTable const g = build_gain_table(t, cfg, 12);

  for (int a = 0; a < t.num_nodes(); ++a)
  {
    for (int b = 0; b < t.num_nodes(); ++b)
    {
      if (a == b)
      {
        continue;
      }
      CHECK(g.at(a, b) == g.at(b, a));
      CHECK(g.at(a, b) > 0.0);
      CHECK(std::isfinite(g.at(a, b)));
    }
  }

  CHECK(g == build_gain_table(t, cfg, 12));
  CHECK_FALSE(g == build_gain_table(t, cfg, 13));
}

TEST_CASE("fading multiplies a unit-mean exponential factor per pair")
{
  ScenarioConfig cfg;
  cfg.num_cellular       = 142;
  cfg.num_d2d            = 0;
  cfg.shadowing_sigma_db = 0.0;
  cfg.fading_enabled     = true;

  Topology const t  = generate_topology(cfg, 21);
  GainTable const g = build_gain_table(t, cfg, 22);

  double const const_lin = std::pow(10.0, cfg.pathloss_const_db / 10.0);
  double sum = 0.0;
  int above_one = 0, n = 0;
  for (int a = 0; a < t.num_nodes(); ++a)
  {
    for (int b = a + 1; b < t.num_nodes(); ++b)
    {
      double const d =
          std::max(distance(t.node_pos(a), t.node_pos(b)), cfg.min_dist_m);
      double const factor =
          g.at(a, b) / (const_lin * std::pow(d, -cfg.pathloss_exp));
      sum += factor;
      above_one += factor > 1.0;
      ++n;
    }
  }
  CHECK(sum / n == doctest::Approx(1.0).epsilon(0.03));
  // P(Exp(1) > 1) = 1/e.
  CHECK(static_cast<double>(above_one) / n ==
        doctest::Approx(std::exp(-1.0)).epsilon(0.05));
}

TEST_CASE("cellular SINR formula on hand-built gains")
{
  Instance inst = oracles::make_fixed_instance(1, 1);
  inst.gains.set(inst.bs_node(), inst.cellular_node(0), 1e-9);

  Allocation alloc(1);
  CHECK(sinr_cellular(inst, alloc, 0) == doctest::Approx(1.0e4).epsilon(1e-12));

  inst.gains.set(inst.d2d_tx_node(0), inst.cellular_node(0), 1e-12);
  alloc.assign(0, 0);
  CHECK(sinr_cellular(inst, alloc, 0) == doctest::Approx(5.0e3).epsilon(1e-12));

  CHECK_THROWS_AS(sinr_cellular(inst, alloc, 1), UsageError);
  CHECK_THROWS_AS(sinr_cellular(inst, alloc, -1), UsageError);
}

TEST_CASE("d2d SINR formula on hand-built gains")
{
  Instance inst = oracles::make_fixed_instance(1, 2, 0.0);
  inst.gains.set(inst.d2d_tx_node(0), inst.d2d_rx_node(0), 1e-6);
  inst.gains.set(inst.bs_node(), inst.d2d_rx_node(0), 1e-13);

  Allocation alloc(2);
  CHECK_THROWS_AS(sinr_d2d(inst, alloc, 0), UsageError);

  alloc.assign(0, 0);
  CHECK(sinr_d2d(inst, alloc, 0) == doctest::Approx(5.0e5).epsilon(1e-12));

  inst.gains.set(inst.d2d_tx_node(1), inst.d2d_rx_node(0), 1e-12);
  alloc.assign(1, 0);
  CHECK(sinr_d2d(inst, alloc, 0) ==
        doctest::Approx(1e-7 / 3e-13).epsilon(1e-12));
}

TEST_CASE("sum rate: closed-form cases and partial allocations")
{
  SUBCASE("single cellular link at linear SINR 3 gives exactly 2 bit/s/Hz")
  {
    Instance inst = oracles::make_fixed_instance(1, 0, 0.0);
    inst.gains.set(inst.bs_node(), inst.cellular_node(0), 3e-13);
    CHECK(sum_rate(inst, Allocation(0)) == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("empty allocation equals the interference-free cellular baseline")
  {
    ScenarioConfig cfg;
    cfg.num_d2d         = 5;
    Instance const inst = make_instance(cfg, 3);

    double expected = 0.0;
    for (int i = 0; i < 4; ++i)
    {
      double const snr = inst.powers.bs_power_w *
                         inst.gains.at(inst.bs_node(), inst.cellular_node(i)) /
                         inst.powers.noise_w;
      expected += std::log2(1.0 + snr);
    }
    CHECK(sum_rate(inst, Allocation(5)) ==
          doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("unassigned pairs contribute nothing")
  {
    ScenarioConfig cfg;
    cfg.num_d2d         = 3;
    Instance const inst = make_instance(cfg, 4);

    Allocation partial(3);
    partial.assign(1, 2);
    Allocation only1(3);
    only1.assign(1, 2);
    CHECK(sum_rate(inst, partial) == sum_rate(inst, only1));
    CHECK(sum_rate(inst, partial) > 0.0);
  }
}

TEST_CASE("SINR and sum rate agree with the independent oracle on random drops")
{
  ScenarioConfig cfg;
  cfg.num_cellular = 3;
  cfg.num_d2d      = 6;

  for (std::uint64_t seed : {1, 2, 3, 4, 5})
  {
    Instance const inst = make_instance(cfg, seed);
    Allocation alloc    = allocate_random(inst, seed + 100);

    for (int i = 0; i < cfg.num_cellular; ++i)
    {
      CHECK(oracles::close(sinr_cellular(inst, alloc, i),
                           oracles::sinr_cellular(inst, alloc, i), 1e-12));
    }
    for (int d = 0; d < cfg.num_d2d; ++d)
    {
      CHECK(oracles::close(sinr_d2d(inst, alloc, d),
                           oracles::sinr_d2d(inst, alloc, d), 1e-12));
    }
    CHECK(oracles::close(sum_rate(inst, alloc), oracles::sum_rate(inst, alloc),
                         1e-9));
  }
}

TEST_CASE("marginal gain: two-evaluation oracle, purity, preconditions")
{
  ScenarioConfig cfg;
  cfg.num_cellular = 3;
  cfg.num_d2d      = 5;

  Instance const inst = make_instance(cfg, 8);
  Allocation alloc(5);
  alloc.assign(0, 1);
  alloc.assign(3, 1);
  Allocation const snapshot = alloc;

  for (int d : {1, 2, 4})
  {
    for (int c = 0; c < 3; ++c)
    {
      CHECK(oracles::close(marginal_gain(inst, alloc, d, c),
                           oracles::marginal_gain(inst, alloc, d, c), 1e-12));
    }
  }
  CHECK(alloc == snapshot);
  CHECK_THROWS_AS(marginal_gain(inst, alloc, 0, 2), UsageError);
}

TEST_CASE("marginal gain of an isolated pair is its own (tiny) rate")
{
  Instance inst     = oracles::make_fixed_instance(2, 2, 1e-9);
  double const tiny = std::numeric_limits<double>::min();
  for (int node = 0; node < inst.gains.num_nodes(); ++node)
  {
    inst.gains.set(inst.d2d_tx_node(0), node, tiny);
    inst.gains.set(inst.d2d_rx_node(0), node, tiny);
  }

  Allocation alloc(2);
  double const gain = marginal_gain(inst, alloc, 0, 0);
  CHECK(gain >= 0.0);
  CHECK(gain < 1e-9);

  Allocation with = alloc;
  with.assign(0, 0);
  CHECK(oracles::close(gain, std::log2(1.0 + sinr_d2d(inst, with, 0)), 1e-9));
}

TEST_CASE("removing a co-channel pair never lowers victim SINRs")
{
  ScenarioConfig cfg;
  cfg.num_cellular = 2;
  cfg.num_d2d      = 8;

  for (std::uint64_t seed : {10, 11, 12})
  {
    Instance const inst = make_instance(cfg, seed);
    Allocation alloc    = allocate_random(inst, seed);
    Rng pick(seed + 50);

    for (int trial = 0; trial < 40; ++trial)
    {
      Allocation work = alloc;
      int const victim =
          static_cast<int>(pick.uniform_index(static_cast<std::size_t>(8)));
      int const resource = work.resource_of(victim);

      double const ue_before  = sinr_cellular(inst, work, resource);
      double const d2d_before = sinr_d2d(inst, work, victim);

      // Remove some other co-channel pair, if one exists.
      for (int other = 0; other < 8; ++other)
      {
        if (other != victim && work.resource_of(other) == resource)
        {
          work.erase(other);
          CHECK(sinr_cellular(inst, work, resource) >= ue_before);
          CHECK(sinr_d2d(inst, work, victim) >= d2d_before);
          break;
        }
      }
    }
  }
}
