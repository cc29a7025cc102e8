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

#include "d2dsim/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

#include "json.hpp"

#include "d2dsim/errors.hpp"
#include "d2dsim/io.hpp"
#include "d2dsim/link_metrics.hpp"
#include "d2dsim/metrics.hpp"

namespace d2dsim::cli {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
  {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
  {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split(std::string_view s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true)
  {
    std::size_t const pos = s.find(sep, start);
    if (pos == std::string_view::npos)
    {
      out.emplace_back(trim(s.substr(start)));
      return out;
    }
    out.emplace_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view token, std::string const &what)
{
  token  = trim(token);
  T value{};
  auto const res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
  {
    throw ConfigError(what + " expects a number, got '" + std::string(token) +
                      "'");
  }
  return value;
}

bool parse_bool(std::string_view token, std::string const &what)
{
  token = trim(token);
  if (token == "true" || token == "1")
  {
    return true;
  }
  if (token == "false" || token == "0")
  {
    return false;
  }
  throw ConfigError(what + " expects true or false, got '" +
                    std::string(token) + "'");
}

std::string iso_timestamp_utc()
{
  auto const now  = std::chrono::system_clock::now();
  std::time_t const t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json config_to_json(ScenarioConfig const &c)
{
  json j;
  j["cell_radius_m"]      = c.cell_radius_m;
  j["num_cellular"]       = c.num_cellular;
  j["num_d2d"]            = c.num_d2d;
  j["d2d_max_dist_m"]     = c.d2d_max_dist_m;
  j["bs_power_dbm"]       = c.bs_power_dbm;
  j["d2d_power_dbm"]      = c.d2d_power_dbm;
  j["noise_dbm"]          = c.noise_dbm;
  j["pathloss_exp"]       = c.pathloss_exp;
  j["pathloss_const_db"]  = c.pathloss_const_db;
  j["shadowing_sigma_db"] = c.shadowing_sigma_db;
  j["fading_enabled"]     = c.fading_enabled;
  j["min_dist_m"]         = c.min_dist_m;
  j["seed"]               = c.seed;
  return j;
}

/// Everything a subcommand needs after config file, flags and defaults are
/// merged: the base config plus the swept value lists.
struct Resolved
{
  ScenarioConfig config;
  std::vector<int> cellular_values;
  std::vector<int> d2d_values;
  std::vector<AllocatorKind> allocators;
  int trials = 0;
  RicaParams params;
};

Resolved resolve(Options const &opts, int default_trials,
                 std::string_view default_allocators)
{
  Resolved r;
  if (opts.config_path)
  {
    r.config = parse_config_file(*opts.config_path);
  }
  if (opts.seed)
  {
    r.config.seed = *opts.seed;
  }
  r.cellular_values = opts.cellular
                          ? parse_int_list(*opts.cellular)
                          : std::vector<int>{r.config.num_cellular};
  r.d2d_values = opts.d2d ? parse_int_list(*opts.d2d)
                          : std::vector<int>{r.config.num_d2d};
  r.allocators = parse_allocator_list(
      opts.allocators ? *opts.allocators : std::string(default_allocators));

  r.trials = opts.trials.value_or(default_trials);
  if (r.trials < 1)
  {
    throw UsageError("--trials must be >= 1 (got " + std::to_string(r.trials) +
                     ")");
  }
  if (opts.price_step)
  {
    r.params.price_step = *opts.price_step;
  }
  if (opts.package_cap)
  {
    r.params.package_cap = *opts.package_cap;
  }
  r.params.skip_negative = opts.skip_negative;
  r.params.validate();

  // Fail fast on any invalid sweep point before compute starts.
  for (int c : r.cellular_values)
  {
    for (int d : r.d2d_values)
    {
      ScenarioConfig probe = r.config;
      probe.num_cellular   = c;
      probe.num_d2d        = d;
      probe.validate();
    }
  }
  return r;
}

json parameters_to_json(Resolved const &r, Options const &opts)
{
  json j;
  j["trials"]        = r.trials;
  j["seed"]          = r.config.seed;
  j["cellular"]      = r.cellular_values;
  j["d2d"]           = r.d2d_values;
  json names         = json::array();
  for (AllocatorKind kind : r.allocators)
  {
    names.push_back(std::string(allocator_name(kind)));
  }
  j["allocators"]    = names;
  j["price_start"]   = r.params.price_start;
  j["price_step"]    = r.params.price_step;
  j["package_cap"]   = r.params.package_cap;
  j["skip_negative"] = r.params.skip_negative;
  j["bins"]          = opts.num_bins;
  j["dump_raw"]      = opts.dump_raw;
  return j;
}

void write_manifest(Options const &opts, Resolved const &r,
                    std::string_view subcommand,
                    std::vector<std::string> const &outputs)
{
  json j;
  j["version"]    = std::string(kVersion);
  j["subcommand"] = std::string(subcommand);
  j["timestamp"]  = iso_timestamp_utc();
  j["config"]     = config_to_json(r.config);
  j["parameters"] = parameters_to_json(r, opts);
  j["outputs"]    = outputs;
  write_file_atomic(opts.out_dir / "manifest.json", j.dump(2) + "\n");
}

/// Runs the full (allocator, C) grid of sweeps.  results[a][c] holds the
/// trials for allocators[a] at cellular_values[c]; shared seeds keep every
/// cell paired with every other.
std::vector<std::vector<ExperimentResult>> run_grid(Resolved const &r)
{
  std::vector<std::vector<ExperimentResult>> results;
  results.reserve(r.allocators.size());
  for (AllocatorKind kind : r.allocators)
  {
    auto &row = results.emplace_back();
    row.reserve(r.cellular_values.size());
    for (int c : r.cellular_values)
    {
      ScenarioConfig cfg = r.config;
      cfg.num_cellular   = c;
      row.push_back(sweep_d2d_count(cfg, kind, r.d2d_values, r.trials,
                                    r.config.seed, r.params));
    }
  }
  return results;
}

CsvTable curve_table(Resolved const &r,
                     std::vector<std::vector<ExperimentResult>> const &results)
{
  CsvTable table;
  table.header = {"allocator", "num_cellular", "num_d2d",
                  "mean_sum_rate", "std_err", "n_trials"};
  for (std::size_t a = 0; a < r.allocators.size(); ++a)
  {
    std::string const name(allocator_name(r.allocators[a]));
    for (std::size_t c = 0; c < r.cellular_values.size(); ++c)
    {
      for (CurvePoint const &pt : aggregate_curve(results[a][c], name))
      {
        table.rows.push_back({name, format_int(r.cellular_values[c]),
                              format_int(pt.x), format_double(pt.mean_sum_rate),
                              format_double(pt.std_err),
                              format_int(pt.n_trials)});
      }
    }
  }
  return table;
}

/// sum_rate per trial at one D, in ascending seed order.
std::vector<double> rates_at(ExperimentResult const &res, int num_d2d)
{
  std::vector<double> out;
  for (TrialResult const &t : res.trials)
  {
    if (t.num_d2d == num_d2d)
    {
      out.push_back(t.sum_rate);
    }
  }
  return out;
}

}  // namespace

ScenarioConfig parse_config_file(std::filesystem::path const &path,
                                 ScenarioConfig base)
{
  std::string const text = read_file(path);

  std::size_t line_no = 0;
  for (std::string const &raw : split(text, '\n'))
  {
    ++line_no;
    std::string_view line = raw;
    if (auto const hash = line.find('#'); hash != std::string_view::npos)
    {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty())
    {
      continue;
    }
    auto const eq = line.find('=');
    if (eq == std::string_view::npos)
    {
      throw ConfigError("malformed config line " + std::to_string(line_no) +
                        " (expected key = value): '" + std::string(line) + "'");
    }
    std::string const key(trim(line.substr(0, eq)));
    std::string_view const value = trim(line.substr(eq + 1));

    if (key == "cell_radius_m")
    {
      base.cell_radius_m = parse_number<double>(value, key);
    }
    else if (key == "num_cellular")
    {
      base.num_cellular = parse_number<int>(value, key);
    }
    else if (key == "num_d2d")
    {
      base.num_d2d = parse_number<int>(value, key);
    }
    else if (key == "d2d_max_dist_m")
    {
      base.d2d_max_dist_m = parse_number<double>(value, key);
    }
    else if (key == "bs_power_dbm")
    {
      base.bs_power_dbm = parse_number<double>(value, key);
    }
    else if (key == "d2d_power_dbm")
    {
      base.d2d_power_dbm = parse_number<double>(value, key);
    }
    else if (key == "noise_dbm")
    {
      base.noise_dbm = parse_number<double>(value, key);
    }
    else if (key == "pathloss_exp")
    {
      base.pathloss_exp = parse_number<double>(value, key);
    }
    else if (key == "pathloss_const_db")
    {
      base.pathloss_const_db = parse_number<double>(value, key);
    }
    else if (key == "shadowing_sigma_db")
    {
      base.shadowing_sigma_db = parse_number<double>(value, key);
    }
    else if (key == "fading_enabled")
    {
      base.fading_enabled = parse_bool(value, key);
    }
    else if (key == "min_dist_m")
    {
      base.min_dist_m = parse_number<double>(value, key);
    }
    else if (key == "seed")
    {
      base.seed = parse_number<std::uint64_t>(value, key);
    }
    else
    {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return base;
}

std::vector<int> parse_int_list(std::string const &text)
{
  std::string_view const body = trim(text);
  if (body.empty())
  {
    throw UsageError("empty value list");
  }

  if (auto const dots = body.find(".."); dots != std::string_view::npos)
  {
    int const lo = parse_number<int>(body.substr(0, dots), "range start");
    int const hi = parse_number<int>(body.substr(dots + 2), "range end");
    if (lo > hi)
    {
      throw UsageError("range '" + std::string(body) +
                       "' is empty (start exceeds end)");
    }
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int v = lo; v <= hi; ++v)
    {
      values.push_back(v);
    }
    return values;
  }

  std::vector<int> values;
  for (std::string const &token : split(body, ','))
  {
    values.push_back(parse_number<int>(token, "list entry"));
  }
  return values;
}

std::vector<AllocatorKind> parse_allocator_list(std::string const &text)
{
  std::vector<AllocatorKind> kinds;
  for (std::string const &token : split(trim(text), ','))
  {
    kinds.push_back(parse_allocator_name(token));
  }
  if (kinds.empty())
  {
    throw UsageError("empty allocator list");
  }
  return kinds;
}

void run_sweep(Options const &opts)
{
  Resolved const r = resolve(opts, 100, "random,rica,new-auction");
  auto const results = run_grid(r);
  write_csv(opts.out_dir / "sweep.csv", curve_table(r, results));
  write_manifest(opts, r, "sweep", {"sweep.csv"});
}

void run_compare(Options const &opts)
{
  Resolved const r = resolve(opts, 100, "random,rica,new-auction");
  if (r.allocators.size() < 2)
  {
    throw UsageError("compare needs at least two allocators");
  }
  auto const results = run_grid(r);
  write_csv(opts.out_dir / "compare.csv", curve_table(r, results));

  CsvTable summary;
  summary.header = {"allocator_a", "allocator_b", "num_cellular",
                    "num_d2d",     "mean_diff",   "std_err",
                    "n_trials"};
  for (std::size_t i = 0; i < r.allocators.size(); ++i)
  {
    for (std::size_t j = i + 1; j < r.allocators.size(); ++j)
    {
      std::string const name_a(allocator_name(r.allocators[i]));
      std::string const name_b(allocator_name(r.allocators[j]));
      for (std::size_t c = 0; c < r.cellular_values.size(); ++c)
      {
        for (int d : r.d2d_values)
        {
          std::vector<double> const a = rates_at(results[i][c], d);
          std::vector<double> const b = rates_at(results[j][c], d);
          std::vector<double> diffs(a.size());
          for (std::size_t t = 0; t < a.size(); ++t)
          {
            diffs[t] = b[t] - a[t];
          }
          double const n = static_cast<double>(diffs.size());
          summary.rows.push_back(
              {name_a, name_b, format_int(r.cellular_values[c]), format_int(d),
               format_double(mean(diffs)),
               format_double(sample_std(diffs) / std::sqrt(n)),
               format_int(static_cast<std::int64_t>(diffs.size()))});
        }
      }
    }
  }
  write_csv(opts.out_dir / "compare_summary.csv", summary);
  write_manifest(opts, r, "compare", {"compare.csv", "compare_summary.csv"});
}

void run_sinr_stats(Options const &opts)
{
  Resolved const r = resolve(opts, 100, "new-auction");
  if (r.allocators.size() != 1)
  {
    throw UsageError("sinr-stats expects exactly one allocator");
  }
  if (r.cellular_values.size() != 1 || r.d2d_values.size() != 1)
  {
    throw UsageError("sinr-stats expects single --cellular and --d2d values");
  }
  if (r.trials < 2)
  {
    throw UsageError("sinr-stats needs --trials >= 2 (got " +
                     std::to_string(r.trials) + ")");
  }

  ScenarioConfig cfg = r.config;
  cfg.num_cellular   = r.cellular_values.front();
  ExperimentResult const res = sweep_d2d_count(
      cfg, r.allocators.front(), r.d2d_values, r.trials, cfg.seed, r.params);

  std::vector<double> samples;
  samples.reserve(res.trials.size());
  for (TrialResult const &t : res.trials)
  {
    samples.push_back(t.ue1_sinr_db);
  }

  PdfEstimate const pdf = sinr_pdf(samples, opts.num_bins);
  CsvTable pdf_table;
  pdf_table.header = {"bin_left_db", "bin_right_db", "density"};
  for (std::size_t b = 0; b < pdf.densities.size(); ++b)
  {
    pdf_table.rows.push_back({format_double(pdf.bin_edges[b]),
                              format_double(pdf.bin_edges[b + 1]),
                              format_double(pdf.densities[b])});
  }
  write_csv(opts.out_dir / "ue1_sinr_pdf.csv", pdf_table);

  // Skewness is undefined below three samples or at zero variance; those
  // degenerate corners report nan rather than failing the whole command.
  double skew = std::numeric_limits<double>::quiet_NaN();
  if (samples.size() >= 3)
  {
    try
    {
      skew = skewness(samples);
    }
    catch (DegenerateDistributionError const &)
    {
    }
  }
  CsvTable summary;
  summary.header = {"n", "mean_db", "std_db", "skewness"};
  summary.rows.push_back(
      {format_int(static_cast<std::int64_t>(samples.size())),
       format_double(mean(samples)), format_double(sample_std(samples)),
       format_double(skew)});
  write_csv(opts.out_dir / "ue1_sinr_summary.csv", summary);

  std::vector<std::string> outputs = {"ue1_sinr_pdf.csv",
                                      "ue1_sinr_summary.csv"};
  if (opts.dump_raw)
  {
    CsvTable raw;
    raw.header = {"seed", "ue1_sinr_db"};
    for (TrialResult const &t : res.trials)
    {
      raw.rows.push_back({format_int(static_cast<std::int64_t>(t.seed)),
                          format_double(t.ue1_sinr_db)});
    }
    write_csv(opts.out_dir / "ue1_sinr_raw.csv", raw);
    outputs.push_back("ue1_sinr_raw.csv");
  }
  write_manifest(opts, r, "sinr-stats", outputs);
}

void run_trial_dump(Options const &opts)
{
  Resolved const r = resolve(opts, 1, "new-auction");
  if (r.allocators.size() != 1)
  {
    throw UsageError("trial expects exactly one allocator");
  }
  if (r.cellular_values.size() != 1 || r.d2d_values.size() != 1)
  {
    throw UsageError("trial expects single --cellular and --d2d values");
  }

  ScenarioConfig cfg = r.config;
  cfg.num_cellular   = r.cellular_values.front();
  cfg.num_d2d        = r.d2d_values.front();
  AllocatorKind const kind = r.allocators.front();

  Instance const inst = make_instance(cfg, cfg.seed);

  AuctionOutcome outcome;
  switch (kind)
  {
  case AllocatorKind::Random:
    outcome.allocation = allocate_random(inst, 3 * cfg.seed + 2);
    break;
  case AllocatorKind::Rica:
    outcome = allocate_rica(inst, r.params);
    break;
  case AllocatorKind::NewAuction:
    outcome = allocate_new_auction(inst, r.params);
    break;
  case AllocatorKind::Exhaustive:
    outcome.allocation = allocate_exhaustive(inst);
    break;
  }
  Allocation const &alloc = outcome.allocation;

  json j;
  j["version"]   = std::string(kVersion);
  j["seed"]      = cfg.seed;
  j["config"]    = config_to_json(cfg);
  j["allocator"] = std::string(allocator_name(kind));

  auto points = [](std::vector<Vec2> const &ps) {
    json arr = json::array();
    for (Vec2 const &p : ps)
    {
      arr.push_back({p.x, p.y});
    }
    return arr;
  };
  j["topology"]["bs"]       = {inst.topology.bs_pos.x, inst.topology.bs_pos.y};
  j["topology"]["cellular"] = points(inst.topology.cellular_pos);
  j["topology"]["d2d_tx"]   = points(inst.topology.d2d_tx_pos);
  j["topology"]["d2d_rx"]   = points(inst.topology.d2d_rx_pos);

  json gains = json::array();
  for (int a = 0; a < inst.gains.num_nodes(); ++a)
  {
    json row = json::array();
    for (int b = 0; b < inst.gains.num_nodes(); ++b)
    {
      row.push_back(inst.gains.at(a, b));
    }
    gains.push_back(std::move(row));
  }
  j["gains"] = std::move(gains);

  j["allocation"] = alloc.slots();
  j["sum_rate"]   = sum_rate(inst, alloc);
  j["revenue"]    = outcome.revenue;

  json cellular_sinr = json::array();
  for (int i = 0; i < inst.num_cellular; ++i)
  {
    cellular_sinr.push_back(linear_to_db(sinr_cellular(inst, alloc, i)));
  }
  j["cellular_sinr_db"] = std::move(cellular_sinr);

  json d2d_sinr = json::array();
  for (int d = 0; d < inst.num_d2d; ++d)
  {
    if (alloc.is_assigned(d))
    {
      d2d_sinr.push_back(linear_to_db(sinr_d2d(inst, alloc, d)));
    }
    else
    {
      d2d_sinr.push_back(nullptr);
    }
  }
  j["d2d_sinr_db"] = std::move(d2d_sinr);

  json rounds = json::array();
  for (AuctionRound const &round : outcome.rounds)
  {
    json jr;
    jr["index"] = round.index;
    jr["price"] = round.price;
    json bids   = json::array();
    for (Bid const &bid : round.bids)
    {
      bids.push_back(
          {{"bidder", bid.bidder}, {"link", bid.link}, {"price", bid.price}});
    }
    jr["bids"] = std::move(bids);
    if (round.winner)
    {
      jr["winner"] = *round.winner;
    }
    else
    {
      jr["winner"] = nullptr;
    }
    jr["package"] = round.package;
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);

  write_file_atomic(opts.out_dir / "trial.json", j.dump(2) + "\n");
  write_manifest(opts, r, "trial", {"trial.json"});
}

}  // namespace d2dsim::cli
