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

#include "frogwild/engine.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "frogwild/error.hpp"
#include "frogwild/rng.hpp"

namespace frogwild {

namespace {
constexpr std::uint64_t kForcedSyncStream = 1ULL << 40;
}

BspEngine::BspEngine(const DirectedGraph& g, const Partition& partition, SyncPolicy policy,
                     unsigned threads, ByteCosts costs)
    : graph_(g),
      partition_(partition),
      policy_(policy),
      threads_(std::max(1u, threads)),
      ledger_(costs),
      incoming_(g.num_vertices(), 0) {
  if (partition.num_vertices() != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "partition does not match graph");
  }
  if (!(policy.p_s >= 0.0 && policy.p_s <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sync probability must lie in [0,1]");
  }
}

void BspEngine::deposit(VertexId v, std::uint64_t amount) {
  if (v >= graph_.num_vertices()) {
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  incoming_[v] += amount;
}

std::uint64_t BspEngine::in_transit_total() const noexcept {
  return std::accumulate(incoming_.begin(), incoming_.end(), std::uint64_t{0});
}

void BspEngine::run_machine(MachineId m, VertexProgram& program,
                            std::span<const std::uint64_t> current, WorkerState& state) {
  ScatterContext ctx(partition_, state.outbox);
  auto& traffic = state.traffic;
  for (VertexId v : partition_.masters_on(m)) {
    const std::uint64_t incoming = current[v];
    if (incoming == 0 && !program.pending(v)) continue;
    const std::uint64_t payload = program.apply(v, incoming, superstep_);
    if (payload == 0) continue;

    const auto mirrors = partition_.mirrors(v);
    ++traffic.active_vertices;
    traffic.mirror_slots += mirrors.size();

    ctx.vertex_ = v;
    ctx.dangling_ = graph_.is_dangling(v);
    ctx.ready_.clear();
    KeyedRng coins(policy_.seed, RngPurpose::kSync, v, superstep_);
    std::size_t next_mirror = 0;
    // One coin per mirror in ascending machine order, whether or not the
    // mirror owns out-edges of v.
    thread_local std::vector<char> synced;
    synced.assign(mirrors.size(), 0);
    for (std::size_t i = 0; i < mirrors.size(); ++i) {
      synced[i] = coins.bernoulli(policy_.p_s);
      if (synced[i]) ++traffic.sync_messages;
    }
    const std::size_t groups = partition_.num_out_groups(v);
    for (std::size_t gi = 0; gi < groups; ++gi) {
      const MachineId owner = partition_.out_group(v, gi).machine;
      if (owner == m) {
        ctx.ready_.push_back(owner);
        continue;
      }
      while (next_mirror < mirrors.size() && mirrors[next_mirror] < owner) ++next_mirror;
      if (next_mirror < mirrors.size() && mirrors[next_mirror] == owner && synced[next_mirror]) {
        ctx.ready_.push_back(owner);
      }
    }
    if (ctx.ready_.empty() && groups > 0 && policy_.at_least_one) {
      KeyedRng pick(policy_.seed, RngPurpose::kSync, v, superstep_, kForcedSyncStream);
      const MachineId forced = partition_.out_group(v, pick.below(groups)).machine;
      ctx.ready_.push_back(forced);
      ++traffic.sync_messages;
      ++traffic.forced_syncs;
    }
    traffic.held_payload += program.scatter(v, payload, superstep_, ctx);
  }
  traffic.clamped_draws += ctx.clamped_;
}

SuperstepTraffic BspEngine::run_superstep(VertexProgram& program) {
  std::vector<std::uint64_t> current(graph_.num_vertices(), 0);
  current.swap(incoming_);

  const MachineId machines = partition_.machines();
  const unsigned workers = std::min<unsigned>(threads_, machines);
  std::vector<WorkerState> states(workers);
  if (workers == 1) {
    for (MachineId m = 0; m < machines; ++m) run_machine(m, program, current, states[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (MachineId m = w; m < machines; m += workers) {
            run_machine(m, program, current, states[w]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) {
        incoming_.swap(current);
        std::rethrow_exception(e);
      }
    }
  }

  // Barrier: combine messages per (destination, sending machine).
  SuperstepTraffic row;
  row.superstep = superstep_;
  std::vector<Message> all;
  std::size_t total = 0;
  for (const auto& s : states) total += s.outbox.size();
  all.reserve(total);
  for (auto& s : states) {
    all.insert(all.end(), s.outbox.begin(), s.outbox.end());
    row.sync_messages += s.traffic.sync_messages;
    row.active_vertices += s.traffic.active_vertices;
    row.mirror_slots += s.traffic.mirror_slots;
    row.forced_syncs += s.traffic.forced_syncs;
    row.held_payload += s.traffic.held_payload;
    row.clamped_draws += s.traffic.clamped_draws;
  }
  std::sort(all.begin(), all.end(), [](const Message& a, const Message& b) {
    return a.dest != b.dest ? a.dest < b.dest : a.from < b.from;
  });
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Message& msg = all[i];
    incoming_[msg.dest] += msg.count;
    const bool first_of_pair =
        i == 0 || all[i - 1].dest != msg.dest || all[i - 1].from != msg.from;
    if (first_of_pair && msg.from != partition_.master(msg.dest)) ++row.frog_messages;
  }
  ledger_.append(row);
  ++superstep_;
  return ledger_.rows().back();
}

double sync_messages_expectation(const Partition& partition, double p_s,
                                 std::span<const VertexId> active) {
  if (!(p_s >= 0.0 && p_s <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p_s must lie in [0,1]");
  }
  std::uint64_t slots = 0;
  for (VertexId v : active) {
    if (v >= partition.num_vertices()) {
      throw Error(ErrorCode::kOutOfRange, "unknown vertex " + std::to_string(v));
    }
    slots += partition.mirrors(v).size();
  }
  return p_s * static_cast<double>(slots);
}

}  // namespace frogwild
