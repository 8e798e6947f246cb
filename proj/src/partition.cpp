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

#include "frogwild/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "frogwild/error.hpp"
#include "frogwild/rng.hpp"

namespace frogwild {

double Partition::replication_factor() const noexcept {
  if (master_.empty()) return 1.0;
  return 1.0 + static_cast<double>(mirror_ids_.size()) / static_cast<double>(master_.size());
}

Partition::OutGroup Partition::out_group(VertexId v, std::size_t i) const {
  const std::size_t gi = group_offsets_[v] + i;
  return {group_machine_[gi],
          {group_targets_.data() + group_begin_[gi], group_targets_.data() + group_begin_[gi + 1]}};
}

std::span<const VertexId> Partition::local_targets(VertexId v, MachineId m) const {
  for (std::size_t gi = group_offsets_[v]; gi < group_offsets_[v + 1]; ++gi) {
    if (group_machine_[gi] == m) {
      return {group_targets_.data() + group_begin_[gi],
              group_targets_.data() + group_begin_[gi + 1]};
    }
  }
  return {};
}

bool Partition::holds_replica(VertexId v, MachineId m) const {
  if (master_[v] == m) return true;
  const auto mir = mirrors(v);
  return std::binary_search(mir.begin(), mir.end(), m);
}

Partition Partition::from_edge_owner(const DirectedGraph& g, MachineId machines,
                                     std::vector<MachineId> edge_owner,
                                     std::uint64_t master_seed) {
  if (machines == 0) throw Error(ErrorCode::kInvalidArgument, "machine count must be positive");
  if (edge_owner.size() != g.num_edges()) {
    throw Error(ErrorCode::kInvalidArgument, "edge placement does not cover every edge");
  }
  const VertexId n = g.num_vertices();
  Partition p;
  p.machines_ = machines;
  p.degenerate_ = machines > g.num_edges();
  p.edge_owner_ = std::move(edge_owner);

  // Replica sets as sorted small vectors.
  std::vector<std::vector<MachineId>> replicas(n);
  auto add = [&replicas](VertexId v, MachineId m) {
    auto& r = replicas[v];
    const auto it = std::lower_bound(r.begin(), r.end(), m);
    if (it == r.end() || *it != m) r.insert(it, m);
  };
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t e = g.edge_begin(v); e < g.edge_begin(v) + g.out_degree(v); ++e) {
      const MachineId m = p.edge_owner_[e];
      if (m >= machines) throw Error(ErrorCode::kOutOfRange, "edge owner out of range");
      add(v, m);
      add(g.edge_target(e), m);
    }
  }

  p.master_.resize(n);
  p.mirror_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    KeyedRng rng(master_seed, RngPurpose::kPartition, 1, v);
    const auto& r = replicas[v];
    const MachineId master = r.empty() ? static_cast<MachineId>(rng.below(machines))
                                       : r[rng.below(r.size())];
    p.master_[v] = master;
    for (MachineId m : r) {
      if (m != master) p.mirror_ids_.push_back(m);
    }
    p.mirror_offsets_[v + 1] = p.mirror_ids_.size();
  }

  // Out-edge groups by machine.
  p.group_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  p.group_begin_.push_back(0);
  std::vector<std::size_t> order;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t begin = g.edge_begin(v);
    order.resize(g.out_degree(v));
    std::iota(order.begin(), order.end(), begin);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return p.edge_owner_[a] < p.edge_owner_[b];
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      const MachineId m = p.edge_owner_[order[i]];
      if (i == 0 || m != p.edge_owner_[order[i - 1]]) {
        if (i != 0) p.group_begin_.push_back(p.group_targets_.size());
        p.group_machine_.push_back(m);
      }
      p.group_targets_.push_back(g.edge_target(order[i]));
    }
    if (!order.empty()) p.group_begin_.push_back(p.group_targets_.size());
    p.group_offsets_[v + 1] = p.group_machine_.size();
  }

  p.master_offsets_.assign(static_cast<std::size_t>(machines) + 1, 0);
  for (VertexId v = 0; v < n; ++v) ++p.master_offsets_[p.master_[v] + 1];
  for (MachineId m = 0; m < machines; ++m) p.master_offsets_[m + 1] += p.master_offsets_[m];
  p.masters_by_machine_.resize(n);
  std::vector<std::size_t> cursor(p.master_offsets_.begin(), p.master_offsets_.end() - 1);
  for (VertexId v = 0; v < n; ++v) p.masters_by_machine_[cursor[p.master_[v]]++] = v;
  return p;
}

namespace {

/// Least-loaded machine among candidates; uniform tie-break.
template <typename Range>
MachineId least_loaded(const Range& candidates, const std::vector<std::size_t>& load,
                       KeyedRng& rng) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  MachineId choice = 0;
  std::uint64_t ties = 0;
  for (MachineId m : candidates) {
    if (load[m] < best) {
      best = load[m];
      choice = m;
      ties = 1;
    } else if (load[m] == best && rng.below(++ties) == 0) {
      choice = m;
    }
  }
  return choice;
}

std::vector<MachineId> greedy_placement(const DirectedGraph& g, MachineId machines,
                                        std::uint64_t seed) {
  const VertexId n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<MachineId> owner(m, 0);
  std::vector<std::size_t> load(machines, 0);
  std::vector<std::vector<MachineId>> replicas(n);
  std::vector<std::size_t> remaining(n, 0);
  for (VertexId v = 0; v < n; ++v) remaining[v] = g.out_degree(v) + g.in_degree(v);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  KeyedRng shuffle(seed, RngPurpose::kPartition, 2);
  for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[shuffle.below(i)]);

  std::vector<MachineId> all(machines);
  std::iota(all.begin(), all.end(), MachineId{0});
  std::vector<MachineId> common;
  KeyedRng ties(seed, RngPurpose::kPartition, 3);

  for (std::size_t e : order) {
    const VertexId u = g.edge_source(e);
    const VertexId w = g.edge_target(e);
    const auto& ru = replicas[u];
    const auto& rw = replicas[w];
    common.clear();
    std::set_intersection(ru.begin(), ru.end(), rw.begin(), rw.end(), std::back_inserter(common));

    MachineId chosen;
    if (!common.empty()) {
      chosen = least_loaded(common, load, ties);
    } else if (!ru.empty() && !rw.empty()) {
      // Replicate the endpoint with fewer edges still to place.
      const auto& pick = remaining[u] >= remaining[w] ? ru : rw;
      chosen = least_loaded(pick, load, ties);
    } else if (!ru.empty() || !rw.empty()) {
      chosen = least_loaded(ru.empty() ? rw : ru, load, ties);
    } else {
      chosen = least_loaded(all, load, ties);
    }
    owner[e] = chosen;
    ++load[chosen];
    for (VertexId v : {u, w}) {
      auto& r = replicas[v];
      const auto it = std::lower_bound(r.begin(), r.end(), chosen);
      if (it == r.end() || *it != chosen) r.insert(it, chosen);
      --remaining[v];
    }
  }
  return owner;
}

}  // namespace

Partition partition_graph(const DirectedGraph& g, MachineId machines,
                          PartitionStrategy strategy, std::uint64_t seed) {
  if (machines == 0) throw Error(ErrorCode::kInvalidArgument, "machine count must be positive");
  std::vector<MachineId> owner;
  switch (strategy) {
    case PartitionStrategy::kRandomEdge: {
      owner.resize(g.num_edges());
      for (std::size_t e = 0; e < owner.size(); ++e) {
        KeyedRng rng(seed, RngPurpose::kPartition, 0, e);
        owner[e] = static_cast<MachineId>(rng.below(machines));
      }
      break;
    }
    case PartitionStrategy::kGreedyVertexCut:
      owner = greedy_placement(g, machines, seed);
      break;
  }
  return Partition::from_edge_owner(g, machines, std::move(owner), seed);
}

}  // namespace frogwild
