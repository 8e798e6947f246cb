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

#ifndef FROGWILD_ENGINE_HPP
#define FROGWILD_ENGINE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frogwild/error.hpp"
#include "frogwild/graph.hpp"
#include "frogwild/partition.hpp"
#include "frogwild/traffic.hpp"

namespace frogwild {

/// Master-to-mirror synchronization rule. Every (vertex, mirror, superstep)
/// decision is an independent coin with success probability p_s, keyed by
/// seed. With at_least_one set, a vertex left without any synchronized
/// replica holding its out-edges gets one such replica force-synchronized,
/// chosen uniformly.
struct SyncPolicy {
  double p_s = 1.0;
  std::uint64_t seed = 0;
  bool at_least_one = false;
};

/// A combined frog (or payload) transfer produced during scatter.
struct Message {
  VertexId dest;
  MachineId from;
  std::uint64_t count;
};

/// What a program sees while scattering one vertex: the replicas that may
/// scatter this superstep and a sink for outgoing payload. Messages are
/// buffered per worker and combined at the barrier.
class ScatterContext {
 public:
  ScatterContext(const Partition& partition, std::vector<Message>& outbox)
      : partition_(partition), outbox_(outbox) {}

  VertexId vertex() const noexcept { return vertex_; }
  MachineId master() const noexcept { return partition_.master(vertex_); }
  bool dangling() const noexcept { return dangling_; }

  /// Synchronized replicas (master included) that own out-edges of the
  /// vertex, in ascending machine order.
  std::span<const MachineId> ready_machines() const noexcept { return ready_; }
  std::span<const VertexId> local_targets(MachineId m) const {
    return partition_.local_targets(vertex_, m);
  }
  /// Out-edges on the master's machine.
  std::size_t master_local_edges() const { return local_targets(master()).size(); }

  /// Throws kOutOfRange for a destination outside the graph.
  void send(MachineId from, VertexId dest, std::uint64_t count) {
    if (dest >= partition_.num_vertices()) {
      throw Error(ErrorCode::kOutOfRange, "program sent to unknown vertex " + std::to_string(dest));
    }
    if (count) outbox_.push_back({dest, from, count});
  }
  void flag_clamped() noexcept { ++clamped_; }

 private:
  friend class BspEngine;

  const Partition& partition_;
  std::vector<Message>& outbox_;
  VertexId vertex_ = 0;
  bool dangling_ = false;
  std::vector<MachineId> ready_;
  std::uint64_t clamped_ = 0;
};

/**
 * Vertex program driven by the engine. For a given vertex, apply() and
 * scatter() are only ever called from one worker at a time, so programs may
 * keep unsynchronized per-vertex state. Randomness must come from keyed
 * streams so that results do not depend on the worker count.
 */
class VertexProgram {
 public:
  virtual ~VertexProgram() = default;

  /// True when v must run apply() even without incoming payload.
  virtual bool pending(VertexId v) const = 0;

  /// Runs at the master. Returns the payload to scatter; zero leaves v
  /// inactive for the rest of the superstep (no synchronization).
  virtual std::uint64_t apply(VertexId v, std::uint64_t incoming, std::uint32_t superstep) = 0;

  /// Distributes payload from the ready machines. Returns the part of the
  /// payload that was not dispatched.
  virtual std::uint64_t scatter(VertexId v, std::uint64_t payload, std::uint32_t superstep,
                                ScatterContext& ctx) = 0;
};

/**
 * Bulk-synchronous driver over a vertex-cut partition.
 *
 * One superstep: combined incoming payload is delivered to masters, apply()
 * runs at every master with payload or pending work, each mirror of an
 * active vertex is synchronized with probability p_s, scatter() runs on the
 * master's machine and the synchronized mirrors, and outgoing messages are
 * combined per (sending machine, destination vertex) at the barrier.
 *
 * Machines are processed by up to `threads` workers. Results are identical
 * for every thread count.
 */
/// Expected sync messages of one superstep: p_s * sum of |mirrors(v)| over
/// the active vertices. Throws kOutOfRange for an unknown vertex.
double sync_messages_expectation(const Partition& partition, double p_s,
                                 std::span<const VertexId> active);

class BspEngine {
 public:
  BspEngine(const DirectedGraph& g, const Partition& partition, SyncPolicy policy,
            unsigned threads = 1, ByteCosts costs = {});

  /// Adds payload at v without any network cost (e.g. initial placement).
  void deposit(VertexId v, std::uint64_t amount);

  /// Executes one superstep and returns its ledger row.
  SuperstepTraffic run_superstep(VertexProgram& program);

  std::uint32_t superstep() const noexcept { return superstep_; }
  std::span<const std::uint64_t> in_transit() const noexcept { return incoming_; }
  std::uint64_t in_transit_total() const noexcept;
  const TrafficLedger& ledger() const noexcept { return ledger_; }

 private:
  struct WorkerState {
    std::vector<Message> outbox;
    SuperstepTraffic traffic;
  };

  void run_machine(MachineId m, VertexProgram& program, std::span<const std::uint64_t> current,
                   WorkerState& state);

  const DirectedGraph& graph_;
  const Partition& partition_;
  SyncPolicy policy_;
  unsigned threads_;
  TrafficLedger ledger_;
  std::uint32_t superstep_ = 0;
  std::vector<std::uint64_t> incoming_;
};

}  // namespace frogwild

#endif  // FROGWILD_ENGINE_HPP
