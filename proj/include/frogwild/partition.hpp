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

#ifndef FROGWILD_PARTITION_HPP
#define FROGWILD_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frogwild/graph.hpp"

namespace frogwild {

using MachineId = std::uint32_t;

enum class PartitionStrategy {
  kRandomEdge,       // every edge to a uniformly random machine
  kGreedyVertexCut,  // oblivious greedy placement minimizing new replicas
};

/**
 * Vertex-cut placement of a graph on M simulated machines.
 *
 * Each edge lives on exactly one machine. A machine holds a replica of every
 * endpoint of the edges it owns. One replica per vertex is the master; the
 * remaining replicas are mirrors. Vertices without incident edges get a
 * master only.
 *
 * For scatter, the out-edges of each vertex are grouped by owning machine:
 * out_groups(v) lists (machine, targets) pairs in ascending machine order.
 */
class Partition {
 public:
  struct OutGroup {
    MachineId machine;
    std::span<const VertexId> targets;
  };

  MachineId machines() const noexcept { return machines_; }
  std::span<const MachineId> edge_owner() const noexcept { return edge_owner_; }
  MachineId master(VertexId v) const { return master_[v]; }
  std::span<const MachineId> mirrors(VertexId v) const {
    return {mirror_ids_.data() + mirror_offsets_[v],
            mirror_ids_.data() + mirror_offsets_[v + 1]};
  }
  std::size_t num_vertices() const noexcept { return master_.size(); }

  /// Average of (1 + |mirrors(v)|) over vertices.
  double replication_factor() const noexcept;
  /// Sum of |mirrors(v)| over all vertices.
  std::size_t total_mirror_slots() const noexcept { return mirror_ids_.size(); }
  /// True when there are more machines than edges.
  bool degenerate() const noexcept { return degenerate_; }

  std::size_t num_out_groups(VertexId v) const {
    return group_offsets_[v + 1] - group_offsets_[v];
  }
  OutGroup out_group(VertexId v, std::size_t i) const;
  /// Local out-edge targets of v on machine m (empty if none).
  std::span<const VertexId> local_targets(VertexId v, MachineId m) const;

  /// Vertices whose master lives on machine m, ascending.
  std::span<const VertexId> masters_on(MachineId m) const {
    return {masters_by_machine_.data() + master_offsets_[m],
            masters_by_machine_.data() + master_offsets_[m + 1]};
  }

  /// Machine holds a replica (master or mirror) of v.
  bool holds_replica(VertexId v, MachineId m) const;

  /// Builds the replica bookkeeping from an edge placement. master_seed keys
  /// the choice of master among each vertex's replicas.
  static Partition from_edge_owner(const DirectedGraph& g, MachineId machines,
                                   std::vector<MachineId> edge_owner,
                                   std::uint64_t master_seed);

 private:
  MachineId machines_ = 1;
  bool degenerate_ = false;
  std::vector<MachineId> edge_owner_;
  std::vector<MachineId> master_;
  std::vector<std::size_t> mirror_offsets_{0};
  std::vector<MachineId> mirror_ids_;
  std::vector<std::size_t> group_offsets_{0};
  std::vector<MachineId> group_machine_;
  std::vector<std::size_t> group_begin_;  // index into group_targets_, size groups+1 per vertex run
  std::vector<VertexId> group_targets_;
  std::vector<std::size_t> master_offsets_{0};
  std::vector<VertexId> masters_by_machine_;
};

/// Deterministic given (graph, machines, strategy, seed). Throws
/// kInvalidArgument when machines == 0.
Partition partition_graph(const DirectedGraph& g, MachineId machines,
                          PartitionStrategy strategy, std::uint64_t seed);

}  // namespace frogwild

#endif  // FROGWILD_PARTITION_HPP
