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

#ifndef FROGWILD_METRICS_HPP
#define FROGWILD_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>

#include "frogwild/graph.hpp"
#include "frogwild/rank_vector.hpp"
#include "frogwild/stats.hpp"

namespace frogwild {

/// c(i) / N. Throws kInvalidArgument unless the counters sum to N.
RankVector estimator(std::span<const std::uint64_t> counters, std::uint64_t frogs);

/// True PageRank mass of v's top-k set (ties by ascending id).
double mass_captured(const RankVector& v, const RankVector& pi, std::size_t k);

/// |top_k(v) ∩ top_k(pi)| / k.
double exact_identification(const RankVector& v, const RankVector& pi, std::size_t k);

struct EpsilonBoundInputs {
  double p_T = 0.15;
  std::uint32_t t = 20;
  std::size_t k = 10;
  double delta = 0.1;
  std::uint64_t frogs = 100000;
  double p_s = 1.0;
  double p_meet = 0.0;  // intersection probability within t steps
};

/// Accuracy bound on the captured mass of the frog estimator:
///   sqrt((1-p_T)^(t+1) / p_T) + sqrt((k/delta) (1/N + (1-p_s^2) p_meet)).
/// Throws kInvalidArgument unless 0 < delta < 1.
double epsilon_bound(const EpsilonBoundInputs& in);

/// Upper bound on the probability that two independent uniform-start walkers
/// under Q meet within t steps: 1/n + t ||pi||_inf / p_T.
double intersection_bound(std::size_t n, std::uint32_t t, double pi_max, double p_T);

/// Monte-Carlo estimate of the meeting probability of two independent walkers
/// under Q within steps 0..t, with a Wilson 99% interval.
Proportion intersection_probability_mc(const DirectedGraph& g, double p_T, std::uint32_t t,
                                       std::uint64_t trials, std::uint64_t seed);

struct SampleSizeHint {
  std::uint32_t steps = 0;
  std::uint64_t frogs = 0;
};

/// Iterations and frog count scaled to the best achievable captured mass:
/// steps = ceil(log(1/mu_k) / log(1/(1-p_T))) + 3, frogs = ceil(4k / mu_k^2).
/// The constants 3 and 4 are calibration choices.
SampleSizeHint sample_size_hint(std::size_t k, double mu_k, double p_T);

struct AccuracyReport {
  std::size_t k = 0;
  double mass_captured = 0.0;
  double normalized_mass = 0.0;
  double exact_identification = 0.0;
  double epsilon_bound = 0.0;
  bool bound_satisfied = false;
};

/// Scores an estimate against the true PageRank vector. The bound holds when
/// mass_captured >= mu_k(pi) - epsilon.
AccuracyReport accuracy_report(const RankVector& estimate, const RankVector& pi, std::size_t k,
                               double epsilon);

/// "k,mass,normalized_mass,exact_id,epsilon_bound,bound_ok"
void write_accuracy_header(std::ostream& os);
void write_accuracy_row(std::ostream& os, const AccuracyReport& r);

}  // namespace frogwild

#endif  // FROGWILD_METRICS_HPP
