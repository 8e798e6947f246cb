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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "frogwild/engine.hpp"
#include "frogwild/error.hpp"
#include "frogwild/frog_program.hpp"
#include "frogwild/partition.hpp"
#include "frogwild/suite.hpp"
#include "frogwild/traffic.hpp"

namespace frogwild {
namespace {

// Activates every vertex every superstep and keeps its payload.
class AlwaysActive : public VertexProgram {
 public:
  bool pending(VertexId) const override { return true; }
  std::uint64_t apply(VertexId, std::uint64_t, std::uint32_t) override { return 1; }
  std::uint64_t scatter(VertexId, std::uint64_t payload, std::uint32_t,
                        ScatterContext&) override {
    return payload;
  }
};

// Sends one unit from every ready machine to every local target.
class Flood : public VertexProgram {
 public:
  bool pending(VertexId) const override { return true; }
  std::uint64_t apply(VertexId, std::uint64_t, std::uint32_t) override { return 1; }
  std::uint64_t scatter(VertexId, std::uint64_t, std::uint32_t, ScatterContext& ctx) override {
    for (MachineId m : ctx.ready_machines()) {
      if (m != ctx.master()) ++scattered_from_non_master;
      for (VertexId t : ctx.local_targets(m)) ctx.send(m, t, 1);
    }
    return 0;
  }
  std::uint64_t scattered_from_non_master = 0;
};

class BadSender : public VertexProgram {
 public:
  bool pending(VertexId) const override { return true; }
  std::uint64_t apply(VertexId, std::uint64_t, std::uint32_t) override { return 1; }
  std::uint64_t scatter(VertexId, std::uint64_t, std::uint32_t, ScatterContext& ctx) override {
    ctx.send(ctx.master(), 1u << 30, 1);
    return 0;
  }
};

void check_partition_invariants(const DirectedGraph& g, const Partition& p) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto succ = g.out_edges(v);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      const MachineId owner = p.edge_owner()[g.edge_begin(v) + i];
      EXPECT_TRUE(p.holds_replica(v, owner));
      EXPECT_TRUE(p.holds_replica(succ[i], owner));
    }
    const auto mir = p.mirrors(v);
    EXPECT_EQ(std::find(mir.begin(), mir.end(), p.master(v)), mir.end());
    std::size_t grouped = 0;
    for (std::size_t gi = 0; gi < p.num_out_groups(v); ++gi) {
      grouped += p.out_group(v, gi).targets.size();
    }
    EXPECT_EQ(grouped, succ.size());
  }
  EXPECT_GE(p.replication_factor(), 1.0);
}

// 50 disjoint two-cycles on two machines, each direction on its own
// machine: every vertex has exactly one mirror.
Partition hundred_slot_partition(const DirectedGraph& g) {
  std::vector<MachineId> owner(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) owner[e] = g.edge_source(e) % 2;
  return Partition::from_edge_owner(g, 2, owner, 1);
}

DirectedGraph fifty_two_cycles() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 50; ++i) {
    edges.emplace_back(2 * i, 2 * i + 1);
    edges.emplace_back(2 * i + 1, 2 * i);
  }
  return DirectedGraph::from_edges(100, edges);
}

TEST(PartitionGraph, SingleMachineHasNoMirrors) {
  const auto g = suite_graph("pa200");
  for (auto s : {PartitionStrategy::kRandomEdge, PartitionStrategy::kGreedyVertexCut}) {
    const auto p = partition_graph(g, 1, s, 3);
    EXPECT_EQ(p.replication_factor(), 1.0);
    EXPECT_EQ(p.total_mirror_slots(), 0u);
  }
}

TEST(PartitionGraph, TwoCycleSplitAcrossMachines) {
  const auto g = two_cycle();
  const auto p = Partition::from_edge_owner(g, 2, {0, 1}, 9);
  EXPECT_EQ(p.mirrors(0).size(), 1u);
  EXPECT_EQ(p.mirrors(1).size(), 1u);
  EXPECT_EQ(p.replication_factor(), 2.0);
  // Some random-edge seed places the two edges apart, with the same outcome.
  bool found = false;
  for (std::uint64_t seed = 0; seed < 64 && !found; ++seed) {
    const auto q = partition_graph(g, 2, PartitionStrategy::kRandomEdge, seed);
    if (q.edge_owner()[0] != q.edge_owner()[1]) {
      found = true;
      EXPECT_EQ(q.replication_factor(), 2.0);
    }
  }
  EXPECT_TRUE(found);
}

TEST(PartitionGraph, InvariantsOnSuite) {
  for (const auto& [name, g] : small_graph_suite()) {
    for (auto s : {PartitionStrategy::kRandomEdge, PartitionStrategy::kGreedyVertexCut}) {
      for (MachineId m : {1u, 2u, 5u, 8u}) {
        SCOPED_TRACE(name + " machines " + std::to_string(m));
        check_partition_invariants(g, partition_graph(g, m, s, 11));
      }
    }
  }
}

TEST(PartitionGraph, Deterministic) {
  const auto g = suite_graph("pa200");
  const auto a = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, 5);
  const auto b = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, 5);
  EXPECT_TRUE(std::equal(a.edge_owner().begin(), a.edge_owner().end(), b.edge_owner().begin()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(a.master(v), b.master(v));
}

TEST(PartitionGraph, ReplicationFactorOneIffNoCut) {
  const auto g = fifty_two_cycles();
  std::vector<MachineId> owner(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) owner[e] = g.edge_source(e) / 2 % 3;
  const auto p = Partition::from_edge_owner(g, 3, owner, 2);
  EXPECT_EQ(p.replication_factor(), 1.0);
  EXPECT_EQ(hundred_slot_partition(g).replication_factor(), 2.0);
}

TEST(PartitionGraph, Errors) {
  EXPECT_THROW(partition_graph(two_cycle(), 0, PartitionStrategy::kRandomEdge, 1), Error);
  const auto p = partition_graph(two_cycle(), 5, PartitionStrategy::kRandomEdge, 1);
  EXPECT_TRUE(p.degenerate());
  check_partition_invariants(two_cycle(), p);
}

TEST(PartitionGraph, GreedyBeatsRandomReplication) {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_digraph(300, 1000, 1000 + seed);
    const double greedy =
        partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, seed).replication_factor();
    const double random =
        partition_graph(g, 8, PartitionStrategy::kRandomEdge, seed).replication_factor();
    wins += greedy <= random;
  }
  EXPECT_GE(wins, 45);
}

TEST(Engine, SingleMachineSendsNothing) {
  const auto g = suite_graph("pa200");
  const auto p = partition_graph(g, 1, PartitionStrategy::kRandomEdge, 1);
  BspEngine engine(g, p, {1.0, 3, false});
  Flood prog;
  const auto row = engine.run_superstep(prog);
  EXPECT_EQ(row.sync_messages, 0u);
  EXPECT_EQ(row.frog_messages, 0u);
}

TEST(Engine, ZeroSyncScattersOnlyOnMasters) {
  const auto g = suite_graph("pa200");
  const auto p = partition_graph(g, 8, PartitionStrategy::kRandomEdge, 1);
  BspEngine engine(g, p, {0.0, 3, false});
  Flood prog;
  for (int s = 0; s < 5; ++s) EXPECT_EQ(engine.run_superstep(prog).sync_messages, 0u);
  EXPECT_EQ(prog.scattered_from_non_master, 0u);
}

TEST(Engine, FullSyncCountsEveryMirror) {
  const auto g = suite_graph("pa200");
  const auto p = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, 1);
  BspEngine engine(g, p, {1.0, 3, false});
  AlwaysActive prog;
  EXPECT_EQ(engine.run_superstep(prog).sync_messages, p.total_mirror_slots());
}

TEST(Engine, HalfSyncMeanOverSupersteps) {
  const auto g = fifty_two_cycles();
  const auto p = hundred_slot_partition(g);
  ASSERT_EQ(p.total_mirror_slots(), 100u);
  BspEngine engine(g, p, {0.5, 17, false});
  AlwaysActive prog;
  double total = 0;
  for (int s = 0; s < 200; ++s) total += static_cast<double>(engine.run_superstep(prog).sync_messages);
  EXPECT_NEAR(total / 200, 50.0, 5.0);
  // Ledger totals are the running sums of the rows.
  EXPECT_EQ(static_cast<double>(engine.ledger().totals().sync_messages), total);
}

TEST(Engine, CombinesMessagesPerMachineAndDestination) {
  // Vertex 0 and 1 both point at 2; all edges on machine 1, masters chosen
  // among replicas, so 2 receives from machine 1 exactly once if remote.
  const auto g = DirectedGraph::from_edges(3, {{0, 2}, {1, 2}});
  const auto p = Partition::from_edge_owner(g, 2, {1, 1}, 4);
  BspEngine engine(g, p, {1.0, 1, false});
  Flood prog;
  const auto row = engine.run_superstep(prog);
  EXPECT_EQ(row.frog_messages, 0u);  // every replica lives on machine 1
  EXPECT_EQ(engine.in_transit()[2], 2u);
}

TEST(Engine, ThreadCountDoesNotChangeResults) {
  const auto g = suite_graph("pa200");
  const auto p = partition_graph(g, 8, PartitionStrategy::kRandomEdge, 2);
  FrogRunConfig cfg;
  cfg.frogs = 20000;
  cfg.p_s = 0.6;
  cfg.threads = 1;
  const auto a = run_frogwild(g, p, cfg);
  for (unsigned t : {2u, 3u, 8u}) {
    cfg.threads = t;
    const auto b = run_frogwild(g, p, cfg);
    EXPECT_EQ(a.counters, b.counters);
    ASSERT_EQ(a.ledger.rows().size(), b.ledger.rows().size());
    for (std::size_t i = 0; i < a.ledger.rows().size(); ++i) {
      EXPECT_EQ(a.ledger.rows()[i].sync_messages, b.ledger.rows()[i].sync_messages);
      EXPECT_EQ(a.ledger.rows()[i].frog_messages, b.ledger.rows()[i].frog_messages);
    }
  }
}

TEST(Engine, UnknownVertexIsAnError) {
  const auto g = suite_graph("five");
  for (unsigned threads : {1u, 4u}) {
    const auto p = partition_graph(g, 4, PartitionStrategy::kRandomEdge, 1);
    BspEngine engine(g, p, {1.0, 1, false}, threads);
    BadSender prog;
    try {
      engine.run_superstep(prog);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
  }
  const auto p = partition_graph(g, 2, PartitionStrategy::kRandomEdge, 1);
  BspEngine engine(g, p, {1.0, 1, false});
  EXPECT_THROW(engine.deposit(5, 1), Error);
  EXPECT_THROW(BspEngine(g, p, {1.5, 1, false}), Error);
}

TEST(SyncExpectation, Examples) {
  const auto g = suite_graph("pa200");
  const auto p = partition_graph(g, 8, PartitionStrategy::kRandomEdge, 1);
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  EXPECT_EQ(sync_messages_expectation(p, 1.0, all), static_cast<double>(p.total_mirror_slots()));
  EXPECT_EQ(sync_messages_expectation(p, 0.0, all), 0.0);
  // 10 active vertices with 4 mirrors each.
  std::vector<VertexId> four;
  for (VertexId v = 0; v < g.num_vertices() && four.size() < 10; ++v) {
    if (p.mirrors(v).size() == 4) four.push_back(v);
  }
  ASSERT_EQ(four.size(), 10u);
  EXPECT_NEAR(sync_messages_expectation(p, 0.3, four), 12.0, 1e-12);
  const std::vector<VertexId> bad{1000};
  EXPECT_THROW(sync_messages_expectation(p, 0.3, bad), Error);
}

TEST(TrafficLedger, BytesTotalsAndCsv) {
  TrafficLedger ledger;
  SuperstepTraffic a;
  a.superstep = 0;
  a.sync_messages = 3;
  a.frog_messages = 2;
  ledger.append(a);
  SuperstepTraffic b;
  b.superstep = 1;
  b.sync_messages = 1;
  ledger.append(b);
  EXPECT_EQ(ledger.rows()[0].bytes, 3u * 16 + 2u * 24);
  EXPECT_EQ(ledger.totals().sync_messages, 4u);
  EXPECT_EQ(ledger.totals().bytes, 3u * 16 + 2u * 24 + 16u);
  std::ostringstream os;
  ledger.write_csv(os);
  EXPECT_EQ(os.str(), "superstep,sync_messages,frog_messages,bytes\n0,3,2,96\n1,1,0,16\n");
}

TEST(TrafficLedger, CustomCosts) {
  TrafficLedger ledger({1, 100});
  SuperstepTraffic a;
  a.sync_messages = 5;
  a.frog_messages = 1;
  ledger.append(a);
  EXPECT_EQ(ledger.totals().bytes, 105u);
}

}  // namespace
}  // namespace frogwild
