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

#include "frogwild/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "frogwild/error.hpp"
#include "frogwild/exact_rank.hpp"
#include "frogwild/rng.hpp"

namespace frogwild {

RankVector estimator(std::span<const std::uint64_t> counters, std::uint64_t frogs) {
  const std::uint64_t sum = std::accumulate(counters.begin(), counters.end(), std::uint64_t{0});
  if (frogs == 0 || sum != frogs) {
    throw Error(ErrorCode::kInvalidArgument,
                "counter sum " + std::to_string(sum) + " does not match frog count " +
                    std::to_string(frogs));
  }
  std::vector<double> values(counters.size());
  const auto n = static_cast<double>(frogs);
  for (std::size_t i = 0; i < counters.size(); ++i) {
    values[i] = static_cast<double>(counters[i]) / n;
  }
  return RankVector(std::move(values));
}

double mass_captured(const RankVector& v, const RankVector& pi, std::size_t k) {
  if (v.size() != pi.size()) throw Error(ErrorCode::kInvalidArgument, "length mismatch");
  double mass = 0.0;
  for (VertexId i : top_k(v, k)) mass += pi[i];
  return mass;
}

double exact_identification(const RankVector& v, const RankVector& pi, std::size_t k) {
  if (v.size() != pi.size()) throw Error(ErrorCode::kInvalidArgument, "length mismatch");
  auto a = top_k(v, k);
  auto b = top_k(pi, k);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<VertexId> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  return static_cast<double>(shared.size()) / static_cast<double>(k);
}

double epsilon_bound(const EpsilonBoundInputs& in) {
  if (!(in.delta > 0.0 && in.delta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0,1)");
  }
  if (!(in.p_T > 0.0 && in.p_T <= 1.0) || !(in.p_s >= 0.0 && in.p_s <= 1.0) ||
      !(in.p_meet >= 0.0) || in.frogs == 0 || in.k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bound parameter out of range");
  }
  const double mixing = std::sqrt(std::pow(1.0 - in.p_T, in.t + 1.0) / in.p_T);
  const double correlation = (1.0 - in.p_s * in.p_s) * in.p_meet;
  const double sampling = std::sqrt(static_cast<double>(in.k) / in.delta *
                                    (1.0 / static_cast<double>(in.frogs) + correlation));
  return mixing + sampling;
}

double intersection_bound(std::size_t n, std::uint32_t t, double pi_max, double p_T) {
  if (n == 0 || !(p_T > 0.0)) throw Error(ErrorCode::kInvalidArgument, "bad bound inputs");
  return 1.0 / static_cast<double>(n) + static_cast<double>(t) * pi_max / p_T;
}

Proportion intersection_probability_mc(const DirectedGraph& g, double p_T, std::uint32_t t,
                                       std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "trial count must be positive");
  if (!(p_T >= 0.0 && p_T <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "teleport probability out of range");
  }
  const VertexId n = g.num_vertices();
  KeyedRng rng(seed, RngPurpose::kMeeting);
  auto step = [&](VertexId pos) {
    return rng.bernoulli(p_T) ? static_cast<VertexId>(rng.below(n)) : sample_step(g, pos, rng);
  };
  std::uint64_t met = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    auto a = static_cast<VertexId>(rng.below(n));
    auto b = static_cast<VertexId>(rng.below(n));
    bool meet = a == b;
    for (std::uint32_t s = 0; s < t && !meet; ++s) {
      a = step(a);
      b = step(b);
      meet = a == b;
    }
    met += meet ? 1 : 0;
  }
  return wilson_interval(met, trials);
}

SampleSizeHint sample_size_hint(std::size_t k, double mu_k, double p_T) {
  if (!(mu_k > 0.0 && mu_k <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "captured mass must lie in (0,1]");
  }
  if (!(p_T > 0.0 && p_T < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "teleport probability must lie in (0,1)");
  }
  SampleSizeHint hint;
  const double steps = std::log(1.0 / mu_k) / std::log(1.0 / (1.0 - p_T));
  hint.steps = static_cast<std::uint32_t>(std::ceil(steps - 1e-12)) + 3;
  hint.frogs = static_cast<std::uint64_t>(
      std::ceil(4.0 * static_cast<double>(k) / (mu_k * mu_k) - 1e-9));
  return hint;
}

AccuracyReport accuracy_report(const RankVector& estimate, const RankVector& pi, std::size_t k,
                               double epsilon) {
  AccuracyReport r;
  r.k = k;
  r.mass_captured = mass_captured(estimate, pi, k);
  const double optimum = mass_captured(pi, pi, k);
  r.normalized_mass = optimum > 0.0 ? r.mass_captured / optimum : 0.0;
  r.exact_identification = exact_identification(estimate, pi, k);
  r.epsilon_bound = epsilon;
  r.bound_satisfied = r.mass_captured >= optimum - epsilon;
  return r;
}

void write_accuracy_header(std::ostream& os) {
  os << "k,mass,normalized_mass,exact_id,epsilon_bound,bound_ok\n";
}

void write_accuracy_row(std::ostream& os, const AccuracyReport& r) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%d\n", r.k, r.mass_captured,
                r.normalized_mass, r.exact_identification, r.epsilon_bound,
                r.bound_satisfied ? 1 : 0);
  os << buf;
}

}  // namespace frogwild
