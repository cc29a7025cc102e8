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

#include <span>
#include <string_view>
#include <vector>

namespace d2dsim {

struct ExperimentResult;

/// One point of a mean-sum-rate curve.
struct CurvePoint
{
  int    x             = 0;    ///< swept value (number of D2D pairs)
  double mean_sum_rate = 0.0;
  double std_err       = 0.0;  ///< sample std / sqrt(n); 0 for n == 1
  int    n_trials      = 0;
};

/// Normalized histogram: densities integrate to 1 over the bin edges.
struct PdfEstimate
{
  std::vector<double> bin_edges;  ///< dB, ascending, size = bins + 1
  std::vector<double> densities;  ///< per-dB density, size = bins
  int n_samples = 0;
};

/// Mean and standard error of sum_rate per swept D2D count for one
/// allocator, points in ascending x order.  UsageError when the result
/// contains no trials for that allocator.
std::vector<CurvePoint> aggregate_curve(ExperimentResult const &results,
                                        std::string_view allocator);

/// Equal-width histogram over [min, max] normalized to unit integral.  An
/// all-equal sample widens the range by +-0.5 dB instead of failing.
/// UsageError for fewer than 2 samples or num_bins < 1.
PdfEstimate sinr_pdf(std::span<double const> samples_db, int num_bins);

/// Fisher-Pearson sample skewness m3 / m2^(3/2) with population moments
/// m_k = (1/n) * sum (x - mean)^k.  UsageError for fewer than 3 samples,
/// DegenerateDistributionError for zero variance.
double skewness(std::span<double const> samples);

/// Mean of a nonempty sample.
double mean(std::span<double const> samples);

/// Bessel-corrected sample standard deviation; 0 for a single sample.
double sample_std(std::span<double const> samples);

}  // namespace d2dsim
