/*
 * Copyright 2026 The FrogWild Simulator Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROGWILD_STATS_HPP
#define FROGWILD_STATS_HPP

#include <cstdint>
#include <span>

namespace frogwild {

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;

  bool passes(double alpha) const noexcept { return p_value >= alpha; }
};

/// Goodness of fit of observed counts against cell probabilities. Cells with
/// expected count below min_expected are pooled into one cell.
ChiSquareResult chi_square_goodness_of_fit(std::span<const std::uint64_t> observed,
                                           std::span<const double> probabilities,
                                           double min_expected = 5.0);

/// Two-sample homogeneity test between two histograms over the same cells.
/// Cells whose combined count is below min_combined are pooled.
ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b,
                                      double min_combined = 10.0);

struct Proportion {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 1.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

inline constexpr double kZ99 = 2.5758293035489004;

/// Wilson score interval at the given normal quantile (99% by default).
Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

/// Total-variation distance between two histograms after normalization.
double total_variation(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
double total_variation(std::span<const std::uint64_t> a, std::span<const double> p);

}  // namespace frogwild

#endif  // FROGWILD_STATS_HPP
