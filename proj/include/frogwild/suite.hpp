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

#ifndef FROGWILD_SUITE_HPP
#define FROGWILD_SUITE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frogwild/graph.hpp"

namespace frogwild {

DirectedGraph two_cycle();
/// One vertex with a self-loop.
DirectedGraph self_loop_point();
/// {0->1, 1->2, 2->0, 3->0, 4->0}
DirectedGraph five_vertex_graph();
/// Every ordered pair, including (v, v).
DirectedGraph complete_with_self_loops(VertexId n);

/// Directed preferential attachment: a directed cycle on out_degree+1 seed
/// vertices, then every new vertex links to out_degree distinct earlier
/// vertices drawn with probability proportional to in-degree + 1.
DirectedGraph preferential_attachment(VertexId n, std::uint32_t out_degree, std::uint64_t seed);

/// G(n, m)-style random digraph: `edges` distinct uniformly drawn ordered
/// pairs (self-loops allowed).
DirectedGraph random_digraph(VertexId n, std::size_t edges, std::uint64_t seed);

/// Keeps each edge independently with probability keep. Vertex ids and count
/// are preserved, so vertices that lose every out-edge become dangling.
/// Throws kEmptyGraph when no edge survives.
DirectedGraph sparsify(const DirectedGraph& g, double keep, std::uint64_t seed);

inline constexpr std::uint64_t kSuiteSeed = 20150101;

struct SuiteGraph {
  std::string name;
  DirectedGraph graph;
};

/// two-cycle, point, five, complete20, pa200.
std::vector<SuiteGraph> small_graph_suite();
std::vector<std::string> suite_graph_names();

/// Graph by suite name; also accepts "pa<N>" for other preferential
/// attachment sizes. Throws kInvalidArgument for unknown names.
DirectedGraph suite_graph(std::string_view name);

}  // namespace frogwild

#endif  // FROGWILD_SUITE_HPP
