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

#include "frogwild/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>
#include <vector>

#include "frogwild/error.hpp"

namespace frogwild {

namespace {

double upper_tail(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

std::uint64_t total(std::span<const std::uint64_t> xs) {
  return std::accumulate(xs.begin(), xs.end(), std::uint64_t{0});
}

}  // namespace

ChiSquareResult chi_square_goodness_of_fit(std::span<const std::uint64_t> observed,
                                           std::span<const double> probabilities,
                                           double min_expected) {
  if (observed.size() != probabilities.size()) {
    throw Error(ErrorCode::kInvalidArgument, "histogram and distribution differ in length");
  }
  const auto n = static_cast<double>(total(observed));
  ChiSquareResult r;
  if (n == 0) return r;
  double pooled_obs = 0.0, pooled_exp = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = n * probabilities[i];
    const auto obs = static_cast<double>(observed[i]);
    if (expected < min_expected) {
      pooled_obs += obs;
      pooled_exp += expected;
      continue;
    }
    r.statistic += (obs - expected) * (obs - expected) / expected;
    ++cells;
  }
  if (pooled_exp > 0.0) {
    r.statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++cells;
  } else if (pooled_obs > 0.0) {
    // Mass observed where none is possible.
    r.statistic = std::numeric_limits<double>::infinity();
    r.p_value = 0.0;
    r.degrees_of_freedom = std::max(cells - 1, 1);
    return r;
  }
  r.degrees_of_freedom = cells - 1;
  r.p_value = upper_tail(r.statistic, r.degrees_of_freedom);
  return r;
}

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b, double min_combined) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "histograms differ in length");
  }
  const auto na = static_cast<double>(total(a));
  const auto nb = static_cast<double>(total(b));
  ChiSquareResult r;
  if (na == 0 || nb == 0) return r;

  std::vector<std::pair<double, double>> cells;
  double pa = 0.0, pb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = static_cast<double>(a[i]);
    const auto y = static_cast<double>(b[i]);
    if (x + y < min_combined) {
      pa += x;
      pb += y;
    } else {
      cells.emplace_back(x, y);
    }
  }
  if (pa + pb > 0.0) cells.emplace_back(pa, pb);
  const double n = na + nb;
  for (const auto& [x, y] : cells) {
    const double row = x + y;
    const double ea = row * na / n;
    const double eb = row * nb / n;
    r.statistic += (x - ea) * (x - ea) / ea + (y - eb) * (y - eb) / eb;
  }
  r.degrees_of_freedom = static_cast<int>(cells.size()) - 1;
  r.p_value = upper_tail(r.statistic, r.degrees_of_freedom);
  return r;
}

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "no trials");
  if (successes > trials) throw Error(ErrorCode::kInvalidArgument, "more successes than trials");
  Proportion p;
  p.successes = successes;
  p.trials = trials;
  const auto n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  p.estimate = phat;
  p.lower = std::max(0.0, centre - half);
  p.upper = std::min(1.0, centre + half);
  return p;
}

double total_variation(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "histograms differ in length");
  const auto na = static_cast<double>(total(a));
  const auto nb = static_cast<double>(total(b));
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += std::abs(static_cast<double>(a[i]) / na - static_cast<double>(b[i]) / nb);
  }
  return 0.5 * d;
}

double total_variation(std::span<const std::uint64_t> a, std::span<const double> p) {
  if (a.size() != p.size()) throw Error(ErrorCode::kInvalidArgument, "lengths differ");
  const auto na = static_cast<double>(total(a));
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(static_cast<double>(a[i]) / na - p[i]);
  return 0.5 * d;
}

}  // namespace frogwild
