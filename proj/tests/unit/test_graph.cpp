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

#include <functional>
#include <sstream>

#include "frogwild/error.hpp"
#include "frogwild/graph.hpp"
#include "frogwild/stats.hpp"
#include "frogwild/suite.hpp"

namespace frogwild {
namespace {

DirectedGraph parse(const std::string& text, EdgeListFormat f = EdgeListFormat::kPlainPairs) {
  std::istringstream in(text);
  return parse_edge_list(in, f);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(LoadEdgeList, TwoCycle) {
  const auto g = parse("0 1\n1 0\n");
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.dangling().empty());
  EXPECT_EQ(g.duplicates_collapsed(), 0u);
}

TEST(LoadEdgeList, DuplicatesCollapse) {
  const auto g = parse("0 1\n0 1\n1 0\n");
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.duplicates_collapsed(), 1u);
}

TEST(LoadEdgeList, DensifiesInLabelOrder) {
  const auto g = parse("5 9\n9 5\n");
  ASSERT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.labels()[0], 5u);
  EXPECT_EQ(g.labels()[1], 9u);
  ASSERT_EQ(g.out_edges(0).size(), 1u);
  EXPECT_EQ(g.out_edges(0)[0], 1u);
}

TEST(LoadEdgeList, SelfLoopsKeptAndCounted) {
  const auto g = parse("0 0\n0 1\n");
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.self_loops(), 1u);
  EXPECT_TRUE(g.is_dangling(1));
}

TEST(LoadEdgeList, SnapCommentsAndBlankLines) {
  const auto g = parse("# header\n\n0\t1\n  1   0  \n", EdgeListFormat::kSnapWithComments);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(LoadEdgeList, CommentRejectedInPlainMode) {
  EXPECT_EQ(code_of([] { parse("# header\n0 1\n"); }), ErrorCode::kParse);
}

TEST(LoadEdgeList, MalformedLineNamesLine) {
  try {
    parse("0 1\n1 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { parse("0 1 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse("0\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse("-1 2\n"); }), ErrorCode::kParse);
}

TEST(LoadEdgeList, IdOverflow) {
  EXPECT_EQ(code_of([] { parse("0 99999999999999999999999\n"); }), ErrorCode::kParse);
}

TEST(LoadEdgeList, EmptyGraph) {
  EXPECT_EQ(code_of([] { parse(""); }), ErrorCode::kEmptyGraph);
  EXPECT_EQ(code_of([] { parse("# only\n", EdgeListFormat::kSnapWithComments); }),
            ErrorCode::kEmptyGraph);
}

TEST(LoadEdgeList, MissingFile) {
  EXPECT_EQ(code_of([] { load_edge_list("/nonexistent/graph.txt", EdgeListFormat::kPlainPairs); }),
            ErrorCode::kIo);
}

TEST(LoadEdgeList, WriteRoundTrip) {
  const auto g = parse("7 3\n3 7\n3 11\n");
  std::ostringstream os;
  write_edge_list(os, g);
  const auto h = parse(os.str());
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(std::vector<std::uint64_t>(h.labels().begin(), h.labels().end()),
            std::vector<std::uint64_t>(g.labels().begin(), g.labels().end()));
}

TEST(FromEdges, Errors) {
  EXPECT_EQ(code_of([] { DirectedGraph::from_edges(0, {}); }), ErrorCode::kEmptyGraph);
  EXPECT_EQ(code_of([] { DirectedGraph::from_edges(2, {{0, 2}}); }), ErrorCode::kOutOfRange);
}

TEST(FromEdges, EffectiveEdgeCount) {
  const auto g = DirectedGraph::from_edges(3, {{0, 1}, {0, 2}});
  std::size_t total = 0;
  for (VertexId v = 0; v < 3; ++v) total += g.effective_out_degree(v);
  EXPECT_EQ(total, g.effective_edge_count());
  EXPECT_EQ(g.effective_edge_count(), 2u + 3u * 2u);
  EXPECT_EQ(g.in_degree(1), 1u);
  EXPECT_EQ(g.edge_source(1), 0u);
}

TEST(StepDistribution, SingleSuccessor) {
  const auto col = step_distribution(two_cycle(), 0);
  EXPECT_EQ(col[0], 0.0);
  EXPECT_EQ(col[1], 1.0);
}

TEST(StepDistribution, Star) {
  const auto g = DirectedGraph::from_edges(3, {{0, 1}, {0, 2}});
  const auto col = step_distribution(g, 0);
  EXPECT_EQ(col[0], 0.0);
  EXPECT_EQ(col[1], 0.5);
  EXPECT_EQ(col[2], 0.5);
}

TEST(StepDistribution, DanglingIsUniform) {
  const auto g = DirectedGraph::from_edges(2, {{0, 1}});
  const auto col = step_distribution(g, 1);
  EXPECT_EQ(col[0], 0.5);
  EXPECT_EQ(col[1], 0.5);
}

TEST(StepDistribution, OutOfRange) {
  EXPECT_EQ(code_of([] { step_distribution(two_cycle(), 2); }), ErrorCode::kOutOfRange);
}

TEST(StepDistribution, SumsToOneOnSuite) {
  for (const auto& [name, g] : small_graph_suite()) {
    for (VertexId j = 0; j < g.num_vertices(); ++j) {
      EXPECT_NEAR(step_distribution(g, j).sum(), 1.0, 1e-12) << name << " " << j;
    }
  }
}

TEST(SampleStep, DeterministicSuccessor) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    KeyedRng rng(seed, RngPurpose::kTest);
    EXPECT_EQ(sample_step(two_cycle(), 0, rng), 1u);
  }
}

TEST(SampleStep, StarFrequencies) {
  const auto g = DirectedGraph::from_edges(3, {{0, 1}, {0, 2}});
  KeyedRng rng(3, RngPurpose::kTest);
  std::uint64_t ones = 0;
  for (int i = 0; i < 100000; ++i) ones += sample_step(g, 0, rng) == 1;
  EXPECT_NEAR(ones / 1e5, 0.5, 0.01);
}

TEST(SampleStep, DanglingFrequencies) {
  const auto g = DirectedGraph::from_edges(2, {{0, 1}});
  KeyedRng rng(4, RngPurpose::kTest);
  std::uint64_t zeros = 0;
  for (int i = 0; i < 100000; ++i) zeros += sample_step(g, 1, rng) == 0;
  EXPECT_NEAR(zeros / 1e5, 0.5, 0.01);
}

TEST(SampleStep, ChiSquareOnPreferentialAttachment) {
  const auto g = suite_graph("pa200");
  const VertexId j = 0;  // the highest in-degree hub has many successors
  KeyedRng rng(5, RngPurpose::kTest);
  std::vector<std::uint64_t> hist(g.num_vertices(), 0);
  for (int i = 0; i < 100000; ++i) ++hist[sample_step(g, j, rng)];
  const auto col = step_distribution(g, j);
  EXPECT_GE(chi_square_goodness_of_fit(hist, col.values()).p_value, 0.001);
}

}  // namespace
}  // namespace frogwild
