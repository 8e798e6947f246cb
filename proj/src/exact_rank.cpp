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

#include "frogwild/exact_rank.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "frogwild/error.hpp"

namespace frogwild {

namespace {

void check_teleport(double p_T, bool allow_zero) {
  const bool ok = allow_zero ? (p_T >= 0.0 && p_T <= 1.0) : (p_T > 0.0 && p_T <= 1.0);
  if (!ok) throw Error(ErrorCode::kInvalidArgument, "teleport probability out of range");
}

void check_length(const DirectedGraph& g, const RankVector& x) {
  if (x.size() != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "vector length does not match vertex count");
  }
}

}  // namespace

RankVector apply_teleport_matrix(const DirectedGraph& g, const RankVector& x, double p_T) {
  check_length(g, x);
  const VertexId n = g.num_vertices();
  std::vector<double> y(n, 0.0);
  double dangling_mass = 0.0;
  double total = 0.0;
  for (VertexId j = 0; j < n; ++j) {
    const double xj = x[j];
    total += xj;
    const auto succ = g.out_edges(j);
    if (succ.empty()) {
      dangling_mass += xj;
      continue;
    }
    const double share = (1.0 - p_T) * xj / static_cast<double>(succ.size());
    for (VertexId i : succ) y[i] += share;
  }
  const double flat = ((1.0 - p_T) * dangling_mass + p_T * total) / n;
  for (double& yi : y) yi += flat;
  return RankVector(std::move(y));
}

PowerIterationResult power_iteration(const DirectedGraph& g, double p_T, double tol,
                                     std::uint32_t max_iters) {
  check_teleport(p_T, false);
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");

  PowerIterationResult out;
  RankVector x = RankVector::uniform(g.num_vertices());
  out.residual = std::numeric_limits<double>::infinity();
  for (std::uint32_t it = 0; it < max_iters; ++it) {
    RankVector next = apply_teleport_matrix(g, x, p_T);
    out.residual = l1_distance(next, x);
    out.residual_history.push_back(out.residual);
    x = std::move(next);
    out.iterations = it + 1;
    if (out.residual <= tol) {
      out.converged = true;
      break;
    }
  }
  // Renormalize away accumulated rounding.
  const double s = x.sum();
  for (double& v : x.mutable_values()) v /= s;
  out.rank = std::move(x);
  return out;
}

RankVector exact_pagerank(const DirectedGraph& g, double p_T, double tol,
                          std::uint32_t max_iters, std::uint32_t* iterations_used) {
  auto result = power_iteration(g, p_T, tol, max_iters);
  if (iterations_used) *iterations_used = result.iterations;
  if (!result.converged) {
    throw Error(ErrorCode::kNotConverged,
                "power iteration did not converge in " + std::to_string(max_iters) +
                    " iterations (residual " + std::to_string(result.residual) + ")");
  }
  return std::move(result.rank);
}

RankVector dense_oracle(const DirectedGraph& g, double p_T) {
  check_teleport(p_T, false);
  const VertexId n = g.num_vertices();
  if (n > kDenseOracleMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "dense oracle limited to 2000 vertices");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (VertexId j = 0; j < n; ++j) {
    const auto succ = g.out_edges(j);
    if (succ.empty()) {
      a.col(j).array() -= (1.0 - p_T) / n;
    } else {
      const double w = (1.0 - p_T) / static_cast<double>(succ.size());
      for (VertexId i : succ) a(i, j) -= w;
    }
  }
  const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, p_T / n);
  const Eigen::VectorXd sol = a.partialPivLu().solve(rhs);
  std::vector<double> values(sol.data(), sol.data() + n);
  const double s = std::accumulate(values.begin(), values.end(), 0.0);
  for (double& v : values) v /= s;
  return RankVector(std::move(values));
}

RankVector evolve_distribution(const DirectedGraph& g, const RankVector& x, double p_T,
                               std::uint32_t steps) {
  check_teleport(p_T, true);
  check_length(g, x);
  RankVector cur = x;
  for (std::uint32_t s = 0; s < steps; ++s) cur = apply_teleport_matrix(g, cur, p_T);
  return cur;
}

double chi2_contrast(const RankVector& alpha, const RankVector& beta) {
  if (alpha.size() != beta.size()) {
    throw Error(ErrorCode::kInvalidArgument, "rank vectors differ in length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (!(beta[i] > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "reference distribution has a zero entry at " + std::to_string(i));
    }
    const double d = alpha[i] - beta[i];
    total += d * d / beta[i];
  }
  return total;
}

std::vector<VertexId> top_k(const RankVector& v, std::size_t k) {
  if (k < 1 || k > v.size()) {
    throw Error(ErrorCode::kOutOfRange, "k must lie in 1..n");
  }
  std::vector<VertexId> ids(v.size());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  auto better = [&v](VertexId a, VertexId b) {
    return v[a] != v[b] ? v[a] > v[b] : a < b;
  };
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k), ids.end(), better);
  ids.resize(k);
  return ids;
}

}  // namespace frogwild
