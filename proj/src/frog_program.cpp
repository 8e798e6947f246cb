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

#include "frogwild/frog_program.hpp"

#include <algorithm>
#include <numeric>

#include "frogwild/error.hpp"

namespace frogwild {

namespace {

void check_probability(double p, const char* what, bool allow_zero = true) {
  const bool ok = allow_zero ? (p >= 0.0 && p <= 1.0) : (p > 0.0 && p <= 1.0);
  if (!ok) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " out of range");
}

/// Splits `count` uniformly at random over `bins` slots (multinomial with
/// equal cell probabilities) via sequential conditional binomials.
template <typename Sink>
void split_uniform(std::uint64_t count, std::size_t bins, KeyedRng& rng, Sink&& sink) {
  std::uint64_t remaining = count;
  for (std::size_t i = 0; i + 1 < bins && remaining > 0; ++i) {
    const std::uint64_t x =
        rng.binomial(remaining, 1.0 / static_cast<double>(bins - i));
    sink(i, x);
    remaining -= x;
  }
  if (remaining > 0) sink(bins - 1, remaining);
}

class FrogProgram final : public VertexProgram {
 public:
  FrogProgram(const DirectedGraph& g, const FrogRunConfig& config)
      : graph_(g), config_(config), counters_(g.num_vertices(), 0), held_(g.num_vertices(), 0) {}

  bool pending(VertexId v) const override { return held_[v] > 0; }

  std::uint64_t apply(VertexId v, std::uint64_t incoming, std::uint32_t superstep) override {
    if (superstep >= config_.t_max) {
      counters_[v] += incoming + held_[v];
      held_[v] = 0;
      return 0;
    }
    KeyedRng rng(config_.seed, RngPurpose::kDeath, v, superstep);
    const std::uint64_t deaths = rng.binomial(incoming, config_.p_T);
    counters_[v] += deaths;
    const std::uint64_t survivors = incoming - deaths + held_[v];
    held_[v] = 0;
    return survivors;
  }

  std::uint64_t scatter(VertexId v, std::uint64_t payload, std::uint32_t superstep,
                        ScatterContext& ctx) override {
    if (ctx.dangling()) {
      teleport(v, payload, superstep, ctx);
      return 0;
    }
    const auto ready = ctx.ready_machines();
    if (ready.empty()) {
      held_[v] += payload;
      return payload;
    }
    if (config_.scatter == ScatterVariant::kCeilDivision) {
      KeyedRng pick(config_.seed, RngPurpose::kRecipients, v, superstep);
      const auto shares = scatter_ceil(payload, ready.size(), pick);
      for (std::size_t i = 0; i < ready.size(); ++i) {
        if (shares[i] == 0) continue;
        const auto targets = ctx.local_targets(ready[i]);
        KeyedRng split(config_.seed, RngPurpose::kEdgeSplit, v, superstep, ready[i]);
        split_uniform(shares[i], targets.size(), split, [&](std::size_t e, std::uint64_t x) {
          ctx.send(ready[i], targets[e], x);
        });
      }
    } else {
      const std::size_t d = graph_.out_degree(v);
      const double a = static_cast<double>(ctx.master_local_edges());
      // Expected fraction of out-edges on synchronized replicas, floored at
      // one edge for vertices that only scatter through a forced sync.
      const double p_eff = std::max(
          (a + config_.p_s * (static_cast<double>(d) - a)) / static_cast<double>(d),
          1.0 / static_cast<double>(d));
      for (MachineId m : ready) {
        const auto targets = ctx.local_targets(m);
        KeyedRng draw(config_.seed, RngPurpose::kScatter, v, superstep, m);
        bool clamped = false;
        const auto counts = scatter_binomial(payload, d, p_eff, targets.size(), draw, &clamped);
        if (clamped) ctx.flag_clamped();
        for (std::size_t e = 0; e < targets.size(); ++e) ctx.send(m, targets[e], counts[e]);
      }
    }
    return 0;
  }

  std::vector<std::uint64_t>& counters() noexcept { return counters_; }
  std::uint64_t held_total() const noexcept {
    return std::accumulate(held_.begin(), held_.end(), std::uint64_t{0});
  }

 private:
  void teleport(VertexId v, std::uint64_t payload, std::uint32_t superstep, ScatterContext& ctx) {
    KeyedRng rng(config_.seed, RngPurpose::kTeleport, v, superstep);
    const VertexId n = graph_.num_vertices();
    const MachineId from = ctx.master();
    if (payload >= n) {
      split_uniform(payload, n, rng, [&](std::size_t dest, std::uint64_t x) {
        ctx.send(from, static_cast<VertexId>(dest), x);
      });
      return;
    }
    dest_scratch_.clear();
    for (std::uint64_t f = 0; f < payload; ++f) {
      dest_scratch_.push_back(static_cast<VertexId>(rng.below(n)));
    }
    std::sort(dest_scratch_.begin(), dest_scratch_.end());
    for (std::size_t i = 0; i < dest_scratch_.size();) {
      std::size_t j = i;
      while (j < dest_scratch_.size() && dest_scratch_[j] == dest_scratch_[i]) ++j;
      ctx.send(from, dest_scratch_[i], j - i);
      i = j;
    }
  }

  const DirectedGraph& graph_;
  const FrogRunConfig& config_;
  std::vector<std::uint64_t> counters_;
  std::vector<std::uint64_t> held_;
  static thread_local std::vector<VertexId> dest_scratch_;
};

thread_local std::vector<VertexId> FrogProgram::dest_scratch_;

}  // namespace

std::vector<std::uint64_t> scatter_ceil(std::uint64_t survivors, std::size_t machines,
                                        KeyedRng& rng) {
  std::vector<std::uint64_t> shares(machines, 0);
  if (machines == 0 || survivors == 0) return shares;

  // Recipient order: a uniformly random permutation prefix of length r.
  const std::size_t r = static_cast<std::size_t>(std::min<std::uint64_t>(survivors, machines));
  std::vector<std::size_t> order(machines);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < r; ++i) {
    std::swap(order[i], order[i + rng.below(machines - i)]);
  }
  const std::uint64_t quota = (survivors + machines - 1) / machines;
  std::uint64_t remaining = survivors;
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t left = r - 1 - i;
    const std::uint64_t share = i + 1 == r ? remaining : std::min(quota, remaining - left);
    shares[order[i]] = share;
    remaining -= share;
  }
  return shares;
}

std::vector<std::uint64_t> scatter_binomial(std::uint64_t survivors, std::size_t d_out,
                                            double p_s_effective, std::size_t enabled_edges,
                                            KeyedRng& rng, bool* clamped) {
  if (d_out == 0) throw Error(ErrorCode::kInvalidArgument, "out-degree must be positive");
  check_probability(p_s_effective, "sync probability", false);
  double p = 1.0 / (static_cast<double>(d_out) * p_s_effective);
  const bool over = p > 1.0;
  if (over) p = 1.0;
  if (clamped) *clamped = over;
  std::vector<std::uint64_t> counts(enabled_edges, 0);
  for (auto& c : counts) c = rng.binomial(survivors, p);
  return counts;
}

FrogRunResult run_frogwild(const DirectedGraph& g, const Partition& partition,
                           const FrogRunConfig& config) {
  if (config.frogs == 0) throw Error(ErrorCode::kInvalidArgument, "frog count must be positive");
  check_probability(config.p_T, "teleport probability", false);
  check_probability(config.p_s, "sync probability");
  if (config.t_max == 0) throw Error(ErrorCode::kInvalidArgument, "t_max must be positive");

  const SyncPolicy policy{config.p_s, config.seed,
                          config.erasure == ErasureKind::kAtLeastOneOutEdge};
  BspEngine engine(g, partition, policy, config.threads, config.costs);
  FrogProgram program(g, config);

  KeyedRng birth(config.seed, RngPurpose::kBirth);
  const VertexId n = g.num_vertices();
  for (std::uint64_t f = 0; f < config.frogs; ++f) {
    engine.deposit(static_cast<VertexId>(birth.below(n)), 1);
  }

  FrogRunResult result;
  for (std::uint32_t s = 0; s <= config.t_max; ++s) {
    engine.run_superstep(program);
    BarrierAudit audit;
    audit.superstep = s;
    audit.stopped = std::accumulate(program.counters().begin(), program.counters().end(),
                                    std::uint64_t{0});
    audit.held = program.held_total();
    audit.in_transit = engine.in_transit_total();
    if (audit.total() != config.frogs) result.conserved = false;
    result.audits.push_back(audit);
  }
  result.stopped_total = result.audits.back().stopped;
  result.counters = std::move(program.counters());
  result.ledger = engine.ledger();
  return result;
}

std::vector<std::uint8_t> enabled_edges(const DirectedGraph& g, const ErasureModel& model,
                                        VertexId v, std::uint64_t step, std::uint64_t seed) {
  check_probability(model.p_s, "preservation probability");
  const std::size_t d = g.out_degree(v);
  std::vector<std::uint8_t> mask(d, 0);
  if (d == 0) return mask;
  KeyedRng rng(seed, RngPurpose::kErasure, v, step);
  bool any = false;
  for (auto& bit : mask) {
    bit = rng.bernoulli(model.p_s) ? 1 : 0;
    any = any || bit;
  }
  if (!any && model.kind == ErasureKind::kAtLeastOneOutEdge) mask[rng.below(d)] = 1;
  return mask;
}

std::vector<std::vector<std::uint8_t>> apply_erasures(const DirectedGraph& g,
                                                      const ErasureModel& model,
                                                      std::uint64_t step, std::uint64_t seed) {
  std::vector<std::vector<std::uint8_t>> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out[v] = enabled_edges(g, model, v, step, seed);
  return out;
}

std::vector<std::uint64_t> walk_fixed_step(const DirectedGraph& g, double p_T, std::uint32_t t,
                                           std::uint64_t walkers, std::uint64_t seed) {
  check_probability(p_T, "teleport probability");
  if (walkers == 0) throw Error(ErrorCode::kInvalidArgument, "walker count must be positive");
  const VertexId n = g.num_vertices();
  std::vector<std::uint64_t> hist(n, 0);
  KeyedRng rng(seed, RngPurpose::kWalk, 1);
  for (std::uint64_t w = 0; w < walkers; ++w) {
    auto pos = static_cast<VertexId>(rng.below(n));
    for (std::uint32_t s = 0; s < t; ++s) {
      pos = rng.bernoulli(p_T) ? static_cast<VertexId>(rng.below(n)) : sample_step(g, pos, rng);
    }
    ++hist[pos];
  }
  return hist;
}

std::vector<std::uint64_t> walk_truncated_geometric(const DirectedGraph& g, double p_T,
                                                    std::uint32_t t, std::uint64_t walkers,
                                                    std::uint64_t seed) {
  check_probability(p_T, "teleport probability");
  if (walkers == 0) throw Error(ErrorCode::kInvalidArgument, "walker count must be positive");
  const VertexId n = g.num_vertices();
  std::vector<std::uint64_t> hist(n, 0);
  KeyedRng rng(seed, RngPurpose::kWalk, 2);
  for (std::uint64_t w = 0; w < walkers; ++w) {
    auto pos = static_cast<VertexId>(rng.below(n));
    for (std::uint32_t s = 0; s < t; ++s) {
      if (rng.bernoulli(p_T)) break;
      pos = sample_step(g, pos, rng);
    }
    ++hist[pos];
  }
  return hist;
}

VertexId walk_under_erasures(const DirectedGraph& g, const ErasureModel& model, double p_T,
                             std::uint32_t t, std::uint64_t seed) {
  check_probability(p_T, "teleport probability");
  check_probability(model.p_s, "preservation probability");
  const VertexId n = g.num_vertices();
  KeyedRng rng(seed, RngPurpose::kWalk, 3);
  auto pos = static_cast<VertexId>(rng.below(n));
  std::uint64_t tick = 0;
  for (std::uint32_t moves = 0; moves < t; ++moves) {
    if (rng.bernoulli(p_T)) break;
    if (g.is_dangling(pos)) {
      pos = static_cast<VertexId>(rng.below(n));
      ++tick;
      continue;
    }
    const auto succ = g.out_edges(pos);
    for (;; ++tick) {
      const auto mask = enabled_edges(g, model, pos, tick, seed);
      const auto live = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
      if (live == 0) continue;
      std::size_t pick = rng.below(live);
      for (std::size_t e = 0; e < mask.size(); ++e) {
        if (mask[e] && pick-- == 0) {
          pos = succ[e];
          break;
        }
      }
      ++tick;
      break;
    }
  }
  return pos;
}

}  // namespace frogwild
