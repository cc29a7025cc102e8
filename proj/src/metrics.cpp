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

#include "d2dsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "d2dsim/errors.hpp"
#include "d2dsim/harness.hpp"

namespace d2dsim {

double mean(std::span<double const> samples)
{
  if (samples.empty())
  {
    throw UsageError("mean of an empty sample");
  }
  double acc = 0.0;
  for (double x : samples)
  {
    acc += x;
  }
  return acc / static_cast<double>(samples.size());
}

double sample_std(std::span<double const> samples)
{
  auto const n = samples.size();
  if (n == 0)
  {
    throw UsageError("standard deviation of an empty sample");
  }
  if (n == 1)
  {
    return 0.0;
  }
  double const m = mean(samples);
  double acc     = 0.0;
  for (double x : samples)
  {
    acc += (x - m) * (x - m);
  }
  return std::sqrt(acc / static_cast<double>(n - 1));
}

std::vector<CurvePoint> aggregate_curve(ExperimentResult const &results,
                                        std::string_view allocator)
{
  std::map<int, std::vector<double>> by_d;
  for (TrialResult const &trial : results.trials)
  {
    if (trial.allocator == allocator)
    {
      by_d[trial.num_d2d].push_back(trial.sum_rate);
    }
  }
  if (by_d.empty())
  {
    throw UsageError("no trials for allocator '" + std::string(allocator) + "'");
  }

  std::vector<CurvePoint> curve;
  curve.reserve(by_d.size());
  for (auto const &[d, rates] : by_d)
  {
    CurvePoint point;
    point.x             = d;
    point.n_trials      = static_cast<int>(rates.size());
    point.mean_sum_rate = mean(rates);
    point.std_err =
        sample_std(rates) / std::sqrt(static_cast<double>(rates.size()));
    curve.push_back(point);
  }
  return curve;
}

PdfEstimate sinr_pdf(std::span<double const> samples_db, int num_bins)
{
  if (samples_db.size() < 2)
  {
    throw UsageError("sinr_pdf needs at least 2 samples (got " +
                     std::to_string(samples_db.size()) + ")");
  }
  if (num_bins < 1)
  {
    throw UsageError("num_bins must be >= 1 (got " + std::to_string(num_bins) +
                     ")");
  }

  auto const [lo_it, hi_it] = std::minmax_element(samples_db.begin(),
                                                  samples_db.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (lo == hi)
  {
    // Degenerate range: all samples equal.
    lo -= 0.5;
    hi += 0.5;
  }

  PdfEstimate pdf;
  pdf.n_samples = static_cast<int>(samples_db.size());
  pdf.bin_edges.resize(static_cast<std::size_t>(num_bins) + 1);
  for (int b = 0; b <= num_bins; ++b)
  {
    pdf.bin_edges[static_cast<std::size_t>(b)] =
        lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(num_bins);
  }
  pdf.bin_edges.back() = hi;

  std::vector<int> counts(static_cast<std::size_t>(num_bins), 0);
  double const width = (hi - lo) / static_cast<double>(num_bins);
  for (double x : samples_db)
  {
    auto bin = static_cast<long>((x - lo) / width);
    bin      = std::clamp(bin, 0L, static_cast<long>(num_bins) - 1);
    ++counts[static_cast<std::size_t>(bin)];
  }

  pdf.densities.resize(static_cast<std::size_t>(num_bins));
  double const norm = static_cast<double>(pdf.n_samples) * width;
  for (int b = 0; b < num_bins; ++b)
  {
    pdf.densities[static_cast<std::size_t>(b)] =
        static_cast<double>(counts[static_cast<std::size_t>(b)]) / norm;
  }
  return pdf;
}

double skewness(std::span<double const> samples)
{
  auto const n = samples.size();
  if (n < 3)
  {
    throw UsageError("skewness needs at least 3 samples (got " +
                     std::to_string(n) + ")");
  }

  double const m = mean(samples);
  double m2      = 0.0;
  double m3      = 0.0;
  for (double x : samples)
  {
    double const dev = x - m;
    m2 += dev * dev;
    m3 += dev * dev * dev;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);

  if (m2 == 0.0)
  {
    throw DegenerateDistributionError(
        "skewness is undefined for a zero-variance sample");
  }
  return m3 / std::pow(m2, 1.5);
}

}  // namespace d2dsim
