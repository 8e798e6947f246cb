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

#include <cmath>
#include <sstream>

#include "frogwild/error.hpp"
#include "frogwild/exact_rank.hpp"
#include "frogwild/suite.hpp"

namespace frogwild {
namespace {

TEST(ExactPagerank, TwoCycleIsHalfHalf) {
  const auto pi = exact_pagerank(two_cycle());
  EXPECT_NEAR(pi[0], 0.5, 1e-12);
  EXPECT_NEAR(pi[1], 0.5, 1e-12);
}

TEST(ExactPagerank, FullTeleportIsUniform) {
  const auto g = suite_graph("pa200");
  const auto pi = exact_pagerank(g, 1.0);
  for (double x : pi.values()) EXPECT_NEAR(x, 1.0 / 200, 1e-15);
}

TEST(ExactPagerank, FiveVertexMatchesOracle) {
  const auto g = five_vertex_graph();
  EXPECT_LE(linf_distance(exact_pagerank(g), dense_oracle(g)), 1e-8);
}

TEST(ExactPagerank, TeleportFloorAndSimplex) {
  for (const auto& [name, g] : small_graph_suite()) {
    const auto pi = exact_pagerank(g);
    EXPECT_TRUE(pi.on_simplex(1e-9)) << name;
    for (double x : pi.values()) EXPECT_GE(x, 0.15 / g.num_vertices() - 1e-12) << name;
  }
}

TEST(ExactPagerank, ResidualBelowTolerance) {
  const auto g = suite_graph("pa200");
  const auto pi = exact_pagerank(g, 0.15, 1e-10);
  EXPECT_LE(l1_distance(apply_teleport_matrix(g, pi, 0.15), pi), 1e-10);
}

TEST(ExactPagerank, DanglingMassRedistributed) {
  const auto g = DirectedGraph::from_edges(3, {{0, 1}, {1, 2}});
  const auto pi = exact_pagerank(g);
  EXPECT_NEAR(pi.sum(), 1.0, 1e-12);
  EXPECT_LE(linf_distance(pi, dense_oracle(g)), 1e-9);
}

TEST(ExactPagerank, NotConvergedReportsResidual) {
  try {
    exact_pagerank(suite_graph("pa200"), 0.15, 1e-14, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotConverged);
    EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
  }
}

TEST(ExactPagerank, InvalidArguments) {
  EXPECT_THROW(exact_pagerank(two_cycle(), 0.0), Error);
  EXPECT_THROW(exact_pagerank(two_cycle(), 1.5), Error);
  EXPECT_THROW(exact_pagerank(two_cycle(), 0.15, 0.0), Error);
}

TEST(PowerIteration, ReportsIterations) {
  const auto r = power_iteration(suite_graph("pa200"), 0.15, 1e-6, 1000);
  EXPECT_TRUE(r.converged);
  EXPECT_GT(r.iterations, 10u);
  EXPECT_EQ(r.residual_history.size(), r.iterations);
  EXPECT_LE(r.residual, 1e-6);
}

TEST(DenseOracle, Basics) {
  const auto a = dense_oracle(two_cycle());
  EXPECT_NEAR(a[0], 0.5, 1e-15);
  const auto b = dense_oracle(self_loop_point());
  EXPECT_EQ(b.size(), 1u);
  EXPECT_NEAR(b[0], 1.0, 1e-15);
}

TEST(DenseOracle, AgreesWithPowerIterationOnRandomGraph) {
  const auto g = random_digraph(20, 60, 7);
  EXPECT_LE(linf_distance(dense_oracle(g), exact_pagerank(g, 0.15, 1e-12)), 1e-9);
}

TEST(DenseOracle, TooLarge) {
  try {
    dense_oracle(suite_graph("pa2001"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(EvolveDistribution, Examples) {
  const auto g = suite_graph("five");
  const auto u = RankVector::uniform(5);
  EXPECT_EQ(evolve_distribution(g, u, 0.15, 0), u);
  const auto pi = dense_oracle(g);
  EXPECT_LE(linf_distance(evolve_distribution(g, pi, 0.15, 25), pi), 1e-9);
  const auto shifted = evolve_distribution(two_cycle(), RankVector({1.0, 0.0}), 0.0, 1);
  EXPECT_EQ(shifted[0], 0.0);
  EXPECT_EQ(shifted[1], 1.0);
}

TEST(Chi2Contrast, Examples) {
  const RankVector a({0.25, 0.75});
  EXPECT_EQ(chi2_contrast(a, a), 0.0);
  EXPECT_DOUBLE_EQ(chi2_contrast(RankVector({1.0, 0.0}), RankVector({0.5, 0.5})), 1.0);
  EXPECT_THROW(chi2_contrast(a, RankVector({1.0, 0.0})), Error);
}

TEST(Chi2Contrast, UniformStartBound) {
  const auto g = suite_graph("complete20");
  const auto pi = dense_oracle(g);
  double c = 1e9;
  for (double x : pi.values()) c = std::min(c, x * 20);
  EXPECT_LE(chi2_contrast(RankVector::uniform(20), pi), (1 - c) / c + 1e-12);
}

TEST(Chi2Contrast, MixingDecayOnSuite) {
  for (const auto& [name, g] : small_graph_suite()) {
    const auto pi = dense_oracle(g);
    RankVector x = RankVector::uniform(g.num_vertices());
    for (int t = 0; t <= 40; ++t) {
      EXPECT_LE(chi2_contrast(x, pi), (0.85 / 0.15) * std::pow(0.85, t) + 1e-9) << name << t;
      x = apply_teleport_matrix(g, x, 0.15);
    }
  }
}

TEST(TopK, Examples) {
  EXPECT_EQ(top_k(RankVector({0.1, 0.7, 0.2}), 1), std::vector<VertexId>{1});
  EXPECT_EQ(top_k(RankVector::uniform(4), 2), (std::vector<VertexId>{0, 1}));
  const auto pi = dense_oracle(five_vertex_graph());
  const auto top = top_k(pi, 2);
  for (VertexId v = 0; v < 5; ++v) {
    if (v != top[0] && v != top[1]) EXPECT_LE(pi[v], pi[top[1]]);
  }
  EXPECT_GE(pi[top[0]], pi[top[1]]);
}

TEST(TopK, RangeErrors) {
  EXPECT_THROW(top_k(RankVector::uniform(3), 0), Error);
  EXPECT_THROW(top_k(RankVector::uniform(3), 4), Error);
}

TEST(RankCsv, SeventeenDigits) {
  std::ostringstream os;
  write_rank_csv(os, RankVector({0.1, 0.9}));
  EXPECT_EQ(os.str(), "vertex,score\n0,0.10000000000000001\n1,0.90000000000000002\n");
}

}  // namespace
}  // namespace frogwild
