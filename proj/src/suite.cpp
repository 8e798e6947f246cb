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

#include "frogwild/suite.hpp"

#include <algorithm>
#include <charconv>

#include "frogwild/error.hpp"
#include "frogwild/rng.hpp"

namespace frogwild {

DirectedGraph two_cycle() { return DirectedGraph::from_edges(2, {{0, 1}, {1, 0}}); }

DirectedGraph self_loop_point() { return DirectedGraph::from_edges(1, {{0, 0}}); }

DirectedGraph five_vertex_graph() {
  return DirectedGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {4, 0}});
}

DirectedGraph complete_with_self_loops(VertexId n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * n);
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId d = 0; d < n; ++d) edges.emplace_back(s, d);
  }
  return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph preferential_attachment(VertexId n, std::uint32_t out_degree, std::uint64_t seed) {
  if (out_degree == 0) throw Error(ErrorCode::kInvalidArgument, "out-degree must be positive");
  const VertexId core = std::min<VertexId>(n, out_degree + 1);
  std::vector<Edge> edges;
  // Each entry is a target token; vertex v appears (in-degree + 1) times.
  std::vector<VertexId> tokens;
  for (VertexId v = 0; v < core; ++v) {
    tokens.push_back(v);
    if (core > 1) {
      const VertexId next = (v + 1) % core;
      edges.emplace_back(v, next);
    }
  }
  for (VertexId v = 0; v < core && core > 1; ++v) tokens.push_back((v + 1) % core);

  KeyedRng rng(seed, RngPurpose::kGenerator, n, out_degree);
  std::vector<VertexId> chosen;
  for (VertexId v = core; v < n; ++v) {
    chosen.clear();
    while (chosen.size() < out_degree) {
      const VertexId target = tokens[rng.below(tokens.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
        chosen.push_back(target);
      }
    }
    for (VertexId target : chosen) {
      edges.emplace_back(v, target);
      tokens.push_back(target);
    }
    tokens.push_back(v);
  }
  return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph random_digraph(VertexId n, std::size_t edges, std::uint64_t seed) {
  const auto pairs = static_cast<std::uint64_t>(n) * n;
  if (edges > pairs) throw Error(ErrorCode::kInvalidArgument, "more edges than ordered pairs");
  KeyedRng rng(seed, RngPurpose::kGenerator, n, edges, 1);
  std::vector<std::uint64_t> codes;
  codes.reserve(edges);
  while (codes.size() < edges) {
    const std::size_t want = edges - codes.size();
    for (std::size_t i = 0; i < want; ++i) codes.push_back(rng.below(pairs));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  }
  std::vector<Edge> list;
  list.reserve(edges);
  for (std::uint64_t c : codes) {
    list.emplace_back(static_cast<VertexId>(c / n), static_cast<VertexId>(c % n));
  }
  return DirectedGraph::from_edges(n, std::move(list));
}

DirectedGraph sparsify(const DirectedGraph& g, double keep, std::uint64_t seed) {
  if (!(keep > 0.0 && keep <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "keep probability must lie in (0,1]");
  }
  std::vector<Edge> kept;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto succ = g.out_edges(v);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      KeyedRng rng(seed, RngPurpose::kSparsify, g.edge_begin(v) + i);
      if (rng.bernoulli(keep)) kept.emplace_back(v, succ[i]);
    }
  }
  if (kept.empty()) throw Error(ErrorCode::kEmptyGraph, "sparsification removed every edge");
  return DirectedGraph::from_edges(g.num_vertices(), std::move(kept));
}

std::vector<std::string> suite_graph_names() {
  return {"two-cycle", "point", "five", "complete20", "pa200"};
}

std::vector<SuiteGraph> small_graph_suite() {
  std::vector<SuiteGraph> suite;
  for (const auto& name : suite_graph_names()) suite.push_back({name, suite_graph(name)});
  return suite;
}

DirectedGraph suite_graph(std::string_view name) {
  if (name == "two-cycle") return two_cycle();
  if (name == "point") return self_loop_point();
  if (name == "five") return five_vertex_graph();
  if (name == "complete20") return complete_with_self_loops(20);
  if (name.starts_with("pa") && name.size() > 2) {
    VertexId n = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 2, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n > 0) {
      return preferential_attachment(n, 3, kSuiteSeed);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite graph '" + std::string(name) + "'");
}

}  // namespace frogwild
