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

#ifndef FROGWILD_FROG_PROGRAM_HPP
#define FROGWILD_FROG_PROGRAM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "frogwild/engine.hpp"
#include "frogwild/graph.hpp"
#include "frogwild/partition.hpp"
#include "frogwild/rng.hpp"
#include "frogwild/traffic.hpp"

namespace frogwild {

enum class ScatterVariant {
  kCeilDivision,  // ceil(K/M) frogs to min(K, M) synchronized machines
  kBinomial,      // Bin(K, 1/(d_out p_s)) frogs on every synchronized edge
};

enum class ErasureKind {
  kIndependent,        // each edge kept with probability p_s
  kAtLeastOneOutEdge,  // as independent, then one edge re-enabled if all erased
};

struct FrogRunConfig {
  std::uint64_t frogs = 100000;
  double p_T = 0.15;
  std::uint32_t t_max = 20;
  double p_s = 1.0;
  ScatterVariant scatter = ScatterVariant::kCeilDivision;
  ErasureKind erasure = ErasureKind::kAtLeastOneOutEdge;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  ByteCosts costs{};
};

/// Frog population at one barrier. For the ceil-division variant
/// stopped + held + in_transit equals the initial frog count exactly.
struct BarrierAudit {
  std::uint32_t superstep = 0;
  std::uint64_t stopped = 0;
  std::uint64_t held = 0;
  std::uint64_t in_transit = 0;

  std::uint64_t total() const noexcept { return stopped + held + in_transit; }
};

struct FrogRunResult {
  std::vector<std::uint64_t> counters;  // c(i)
  TrafficLedger ledger;
  std::vector<BarrierAudit> audits;
  std::uint64_t stopped_total = 0;
  /// Every barrier total equals the initial frog count.
  bool conserved = true;
};

/**
 * Runs the FrogWild vertex program on the simulated cluster.
 *
 * Frogs are born on independent uniform vertices. Superstep s = 0..t_max:
 * apply() kills each incoming frog with probability p_T (incrementing c);
 * survivors scatter from the master's machine and the mirrors synchronized
 * this superstep. At superstep t_max every remaining frog stops where it is.
 * Frogs at a vertex with no synchronized replica owning out-edges wait for
 * the next superstep without facing another death coin. Frogs at a dangling
 * vertex jump from the master's machine to uniformly random vertices.
 *
 * The binomial variant conserves frogs only in expectation; its
 * stopped_total may differ from the initial count.
 */
FrogRunResult run_frogwild(const DirectedGraph& g, const Partition& partition,
                           const FrogRunConfig& config);

/// Per-machine frog counts for `machines` synchronized recipients. Exactly
/// min(K, M) recipients get frogs; each gets ceil(K/M) unless that would
/// leave a later recipient empty; the total is exactly K. Recipients are a
/// uniformly random subset when K < M, and the short share lands on a
/// uniformly random recipient otherwise. machines == 0 returns an empty vector.
std::vector<std::uint64_t> scatter_ceil(std::uint64_t survivors, std::size_t machines,
                                        KeyedRng& rng);

/// Independent Bin(K, min(1, 1/(d_out * p_s_effective))) draws, one per
/// enabled edge. Sets *clamped when the probability had to be clamped.
std::vector<std::uint64_t> scatter_binomial(std::uint64_t survivors, std::size_t d_out,
                                            double p_s_effective, std::size_t enabled_edges,
                                            KeyedRng& rng, bool* clamped = nullptr);

struct ErasureModel {
  ErasureKind kind = ErasureKind::kAtLeastOneOutEdge;
  double p_s = 1.0;
};

/// Enabled out-edges of v at `step` as a 0/1 mask over out_edges(v). Draws
/// are keyed by (seed, v, step) and independent across vertices and steps.
std::vector<std::uint8_t> enabled_edges(const DirectedGraph& g, const ErasureModel& model,
                                        VertexId v, std::uint64_t step, std::uint64_t seed);

/// Enabled-edge masks for every vertex at one step.
std::vector<std::vector<std::uint8_t>> apply_erasures(const DirectedGraph& g,
                                                      const ErasureModel& model,
                                                      std::uint64_t step, std::uint64_t seed);

/// Final-position histogram of independent walkers that start uniformly and
/// take exactly t steps of Q.
std::vector<std::uint64_t> walk_fixed_step(const DirectedGraph& g, double p_T, std::uint32_t t,
                                           std::uint64_t walkers, std::uint64_t seed);

/// Final-position histogram of independent walkers that start uniformly and
/// take min(Geom(p_T), t) steps of P.
std::vector<std::uint64_t> walk_truncated_geometric(const DirectedGraph& g, double p_T,
                                                    std::uint32_t t, std::uint64_t walkers,
                                                    std::uint64_t seed);

/// One walker under an erasure model: uniform start, min(Geom(p_T), t) moves,
/// each move uniform over the currently enabled out-edges. When every edge is
/// erased the walker waits for the next step's draw; waiting costs neither a
/// move nor a death coin. Returns the final vertex.
VertexId walk_under_erasures(const DirectedGraph& g, const ErasureModel& model, double p_T,
                             std::uint32_t t, std::uint64_t seed);

}  // namespace frogwild

#endif  // FROGWILD_FROG_PROGRAM_HPP
