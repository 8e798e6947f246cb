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

#ifndef FROGWILD_EXACT_RANK_HPP
#define FROGWILD_EXACT_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frogwild/graph.hpp"
#include "frogwild/rank_vector.hpp"

namespace frogwild {

inline constexpr double kDefaultTeleport = 0.15;
inline constexpr double kOracleTolerance = 1e-10;
inline constexpr double kBaselineTolerance = 1e-6;
inline constexpr VertexId kDenseOracleMaxVertices = 2000;

/// y = Q x where Q = (1 - p_T) P + (p_T / n) 1 and dangling columns of P are
/// uniform.
RankVector apply_teleport_matrix(const DirectedGraph& g, const RankVector& x, double p_T);

struct PowerIterationResult {
  RankVector rank;
  std::uint32_t iterations = 0;
  double residual = 0.0;  // ||Q x - x||_1 of the last measured iterate
  bool converged = false;
  std::vector<double> residual_history;
};

/// Power iteration from the uniform vector. Never throws on non-convergence;
/// the caller inspects `converged`.
PowerIterationResult power_iteration(const DirectedGraph& g, double p_T, double tol,
                                     std::uint32_t max_iters);

/// PageRank by power iteration; throws kNotConverged (with the residual in
/// the message) when max_iters is exhausted.
RankVector exact_pagerank(const DirectedGraph& g, double p_T = kDefaultTeleport,
                          double tol = kOracleTolerance, std::uint32_t max_iters = 100000,
                          std::uint32_t* iterations_used = nullptr);

/// Direct dense solve of (I - (1 - p_T) P) x = (p_T / n) 1, normalized.
/// Independent of the power iteration path; limited to n <= 2000.
RankVector dense_oracle(const DirectedGraph& g, double p_T = kDefaultTeleport);

/// Q^steps x, applied matrix-free.
RankVector evolve_distribution(const DirectedGraph& g, const RankVector& x, double p_T,
                               std::uint32_t steps);

/// sum_i (alpha_i - beta_i)^2 / beta_i. beta must be strictly positive.
double chi2_contrast(const RankVector& alpha, const RankVector& beta);

/// The k largest entries, ties broken by ascending vertex id.
std::vector<VertexId> top_k(const RankVector& v, std::size_t k);

}  // namespace frogwild

#endif  // FROGWILD_EXACT_RANK_HPP
