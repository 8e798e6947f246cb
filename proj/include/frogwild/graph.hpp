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

#ifndef FROGWILD_GRAPH_HPP
#define FROGWILD_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "frogwild/rank_vector.hpp"
#include "frogwild/rng.hpp"

namespace frogwild {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class EdgeListFormat {
  kPlainPairs,        // every non-blank line is "src dst"
  kSnapWithComments,  // as above, lines starting with '#' are skipped
};

/**
 * Immutable directed graph in compressed-sparse-row form.
 *
 * Vertex ids are dense (0..n-1). Out-edges of a vertex are sorted by target
 * and contain no duplicates. Edge k of the global numbering is the k-th entry
 * of the concatenated out-edge lists, so edge ids are stable for a given
 * graph and can key per-edge placement decisions.
 *
 * A vertex without successors is dangling; a walker there jumps to a
 * uniformly random vertex, so its effective out-degree is n.
 */
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds a graph on vertices 0..n-1. Duplicate edges are collapsed.
  /// Throws kOutOfRange for an endpoint >= n, kEmptyGraph for n == 0.
  static DirectedGraph from_edges(VertexId n, std::vector<Edge> edges);

  VertexId num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return targets_.size(); }

  std::span<const VertexId> out_edges(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return in_degree_[v]; }
  bool is_dangling(VertexId v) const { return out_degree(v) == 0; }

  /// Global id of the first out-edge of v.
  std::size_t edge_begin(VertexId v) const { return offsets_[v]; }
  VertexId edge_target(std::size_t edge) const { return targets_[edge]; }
  /// Source vertex of a global edge id (binary search over offsets).
  VertexId edge_source(std::size_t edge) const;

  std::span<const VertexId> dangling() const noexcept { return dangling_; }

  /// Out-degree after dangling repair: n for dangling vertices.
  std::size_t effective_out_degree(VertexId v) const {
    return is_dangling(v) ? n_ : out_degree(v);
  }
  std::size_t effective_edge_count() const noexcept {
    return targets_.size() + static_cast<std::size_t>(n_) * dangling_.size();
  }

  /// Original ids from the input file, indexed by dense id. Identity when the
  /// graph was not loaded from a file.
  std::span<const std::uint64_t> labels() const noexcept { return labels_; }
  std::size_t duplicates_collapsed() const noexcept { return duplicates_collapsed_; }
  std::size_t self_loops() const noexcept { return self_loops_; }

  std::vector<Edge> edges() const;

 private:
  friend DirectedGraph parse_edge_list(std::istream&, EdgeListFormat);

  VertexId n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::uint32_t> in_degree_;
  std::vector<VertexId> dangling_;
  std::vector<std::uint64_t> labels_;
  std::size_t duplicates_collapsed_ = 0;
  std::size_t self_loops_ = 0;
};

/// One transition of a walk, recorded by trace-producing analysis routines.
struct WalkStep {
  VertexId source;
  VertexId destination;
  std::uint32_t step_index;
};

/// Reads an edge list and densifies ids in ascending label order.
/// Errors: kParse (with line number) for malformed lines, kParse for ids that
/// overflow 64 bits, kTooLarge when more than 2^32-1 distinct ids appear,
/// kEmptyGraph when no edge is present, kIo when the file cannot be read.
DirectedGraph load_edge_list(const std::filesystem::path& path, EdgeListFormat format);
DirectedGraph parse_edge_list(std::istream& in, EdgeListFormat format);

/// Writes "src dst" lines using the graph's labels.
void write_edge_list(std::ostream& os, const DirectedGraph& g);

/// Column j of the transition matrix P, with uniform repair for dangling j.
RankVector step_distribution(const DirectedGraph& g, VertexId j);

/// Draws a successor of j according to step_distribution(g, j).
inline VertexId sample_step(const DirectedGraph& g, VertexId j, KeyedRng& rng) {
  const auto succ = g.out_edges(j);
  if (succ.empty()) return static_cast<VertexId>(rng.below(g.num_vertices()));
  return succ[rng.below(succ.size())];
}

}  // namespace frogwild

#endif  // FROGWILD_GRAPH_HPP
