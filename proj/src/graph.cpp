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

#include "frogwild/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>

#include "frogwild/error.hpp"

namespace frogwild {

namespace {

void check_vertex(const DirectedGraph& g, VertexId v) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(v) + " out of range (n=" +
                    std::to_string(g.num_vertices()) + ")");
  }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

DirectedGraph DirectedGraph::from_edges(VertexId n, std::vector<Edge> edges) {
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  for (const auto& [s, d] : edges) {
    if (s >= n || d >= n) {
      throw Error(ErrorCode::kOutOfRange, "edge endpoint outside 0..n-1");
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());

  DirectedGraph g;
  g.duplicates_collapsed_ = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.in_degree_.assign(n, 0);
  g.targets_.reserve(edges.size());
  for (const auto& [s, d] : edges) {
    ++g.offsets_[s + 1];
    ++g.in_degree_[d];
    g.targets_.push_back(d);
    if (s == d) ++g.self_loops_;
  }
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  for (VertexId v = 0; v < n; ++v) {
    if (g.out_degree(v) == 0) g.dangling_.push_back(v);
  }
  g.labels_.resize(n);
  for (VertexId v = 0; v < n; ++v) g.labels_[v] = v;
  return g;
}

VertexId DirectedGraph::edge_source(std::size_t edge) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), edge);
  return static_cast<VertexId>((it - offsets_.begin()) - 1);
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId v = 0; v < n_; ++v) {
    for (VertexId w : out_edges(v)) out.emplace_back(v, w);
  }
  return out;
}

DirectedGraph parse_edge_list(std::istream& in, EdgeListFormat format) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) continue;
    if (line[pos] == '#' && format == EdgeListFormat::kSnapWithComments) continue;

    std::uint64_t ids[2];
    for (int k = 0; k < 2; ++k) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      const char* first = line.data() + pos;
      const char* end = line.data() + line.size();
      const auto [ptr, ec] = std::from_chars(first, end, ids[k]);
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": vertex id overflow");
      }
      if (ec != std::errc() || (ptr != end && !is_space(*ptr))) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": malformed edge '" + line + "'");
      }
      pos = static_cast<std::size_t>(ptr - line.data());
    }
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos != line.size()) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": malformed edge '" + line + "'");
    }
    raw.emplace_back(ids[0], ids[1]);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error");
  if (raw.empty()) throw Error(ErrorCode::kEmptyGraph, "edge list contains no edges");

  std::vector<std::uint64_t> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [s, d] : raw) {
    labels.push_back(s);
    labels.push_back(d);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() >= std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorCode::kTooLarge, "more than 2^32-1 distinct vertex ids");
  }
  auto dense = [&](std::uint64_t label) {
    return static_cast<VertexId>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [s, d] : raw) edges.emplace_back(dense(s), dense(d));

  auto g = DirectedGraph::from_edges(static_cast<VertexId>(labels.size()), std::move(edges));
  g.labels_ = std::move(labels);
  return g;
}

DirectedGraph load_edge_list(const std::filesystem::path& path, EdgeListFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return parse_edge_list(in, format);
}

void write_edge_list(std::ostream& os, const DirectedGraph& g) {
  const auto labels = g.labels();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId w : g.out_edges(v)) os << labels[v] << ' ' << labels[w] << '\n';
  }
}

RankVector step_distribution(const DirectedGraph& g, VertexId j) {
  check_vertex(g, j);
  const VertexId n = g.num_vertices();
  std::vector<double> column(n, 0.0);
  const auto succ = g.out_edges(j);
  if (succ.empty()) {
    std::fill(column.begin(), column.end(), 1.0 / n);
  } else {
    const double w = 1.0 / static_cast<double>(succ.size());
    for (VertexId i : succ) column[i] += w;
  }
  return RankVector(std::move(column));
}

}  // namespace frogwild
