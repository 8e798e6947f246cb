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

#include "frogwild/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>

#include "frogwild/error.hpp"
#include "frogwild/exact_rank.hpp"
#include "frogwild/frog_program.hpp"
#include "frogwild/metrics.hpp"
#include "frogwild/partition.hpp"
#include "frogwild/stats.hpp"
#include "frogwild/suite.hpp"

namespace frogwild {

namespace {

constexpr double kAlpha = 0.001;

struct Context {
  VerifyOptions options;
  std::vector<SuiteGraph> suite;
  bool full() const { return options.suite == VerifySuite::kFull; }
  std::uint64_t seed(std::uint64_t salt) const { return options.seed * 1000003ULL + salt; }
};

PropertyOutcome outcome(std::string module, std::string property, double statistic,
                        std::string comparator, double threshold, std::string detail = {}) {
  PropertyOutcome o{std::move(module), std::move(property), statistic, std::move(comparator),
                    threshold, false, std::move(detail)};
  if (o.comparator == "<=") o.passed = statistic <= threshold;
  else if (o.comparator == ">=") o.passed = statistic >= threshold;
  else if (o.comparator == "==") o.passed = statistic == threshold;
  else o.passed = true;  // advisory
  return o;
}

std::vector<double> exact_distribution(const DirectedGraph& g, double p_T, std::uint32_t t) {
  const auto v = evolve_distribution(g, RankVector::uniform(g.num_vertices()), p_T, t);
  return {v.values().begin(), v.values().end()};
}

// ---- graph-core ----------------------------------------------------------

PropertyOutcome step_sums(const Context& ctx) {
  double worst = 0.0;
  for (const auto& [name, g] : ctx.suite) {
    for (VertexId j = 0; j < g.num_vertices(); ++j) {
      worst = std::max(worst, std::abs(step_distribution(g, j).sum() - 1.0));
    }
  }
  return outcome("graph-core", "step_distribution sums to one", worst, "<=", 1e-12);
}

PropertyOutcome step_support(const Context& ctx) {
  double mismatches = 0;
  for (const auto& [name, g] : ctx.suite) {
    for (VertexId j = 0; j < g.num_vertices(); ++j) {
      if (g.is_dangling(j)) continue;
      const auto col = step_distribution(g, j);
      std::vector<VertexId> support;
      for (VertexId i = 0; i < g.num_vertices(); ++i) {
        if (col[i] > 0.0) support.push_back(i);
      }
      const auto succ = g.out_edges(j);
      if (!std::equal(support.begin(), support.end(), succ.begin(), succ.end())) ++mismatches;
    }
  }
  return outcome("graph-core", "step_distribution support equals out-edges", mismatches, "==", 0);
}

PropertyOutcome sample_step_fit(const Context& ctx) {
  double worst = 1.0;
  const std::uint64_t draws = 100000;
  for (const auto& [name, g] : ctx.suite) {
    const VertexId probes = std::min<VertexId>(g.num_vertices(), 3);
    for (VertexId j = 0; j < probes; ++j) {
      KeyedRng rng(ctx.seed(1), RngPurpose::kTest, j, std::hash<std::string>{}(name));
      std::vector<std::uint64_t> hist(g.num_vertices(), 0);
      for (std::uint64_t d = 0; d < draws; ++d) ++hist[sample_step(g, j, rng)];
      const auto col = step_distribution(g, j);
      worst = std::min(worst, chi_square_goodness_of_fit(hist, col.values()).p_value);
    }
  }
  return outcome("graph-core", "sample_step chi-square fit (min p)", worst, ">=", kAlpha);
}

// ---- exact-rank ----------------------------------------------------------

PropertyOutcome oracle_agreement(const Context& ctx) {
  double worst = 0.0;
  const int graphs = ctx.full() ? 50 : 20;
  KeyedRng sizes(ctx.seed(2), RngPurpose::kTest);
  for (int i = 0; i < graphs; ++i) {
    const auto n = static_cast<VertexId>(2 + sizes.below(199));
    const auto m = static_cast<std::size_t>(sizes.below(static_cast<std::uint64_t>(n) * 4) + 1);
    const auto g = random_digraph(n, std::min<std::size_t>(m, static_cast<std::size_t>(n) * n),
                                  ctx.seed(100 + i));
    const auto a = exact_pagerank(g, kDefaultTeleport, 1e-12);
    const auto b = dense_oracle(g, kDefaultTeleport);
    worst = std::max(worst, linf_distance(a, b));
  }
  return outcome("exact-rank", "power iteration matches dense oracle (linf)", worst, "<=", 1e-8,
                 std::to_string(graphs) + " random graphs, n <= 200");
}

PropertyOutcome mixing_decay(const Context& ctx) {
  double worst = -1.0;
  const double p_T = kDefaultTeleport;
  for (const auto& [name, g] : ctx.suite) {
    const auto pi = dense_oracle(g, p_T);
    RankVector x = RankVector::uniform(g.num_vertices());
    for (std::uint32_t t = 0; t <= 40; ++t) {
      const double bound = (1.0 - p_T) / p_T * std::pow(1.0 - p_T, t);
      worst = std::max(worst, chi2_contrast(x, pi) - bound);
      x = apply_teleport_matrix(g, x, p_T);
    }
  }
  return outcome("exact-rank", "chi2(Q^t u; pi) minus decay bound (max, t=0..40)", worst, "<=",
                 1e-9);
}

PropertyOutcome residual_monotone(const Context& ctx) {
  double increases = 0;
  for (const auto& [name, g] : ctx.suite) {
    const auto r = power_iteration(g, kDefaultTeleport, 1e-14, 500);
    for (std::size_t i = 1; i < r.residual_history.size(); ++i) {
      if (r.residual_history[i] > r.residual_history[i - 1] * (1.0 + 1e-9) + 1e-15) ++increases;
    }
  }
  return outcome("exact-rank", "power-iteration residual increases", increases, "advisory", 0,
                 "increases above rounding are reported, not failed");
}

PropertyOutcome top_k_equivariance(const Context& ctx) {
  double mismatches = 0;
  KeyedRng rng(ctx.seed(3), RngPurpose::kTest);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(60);
    std::vector<double> values(n);
    // Coarse values force ties.
    for (auto& v : values) v = static_cast<double>(rng.below(8));
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    // Ties are broken by id, so relabeling must preserve id order among ties:
    // apply a permutation that is monotone within each value class.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return values[a] < values[b]; });
    std::vector<VertexId> relabel(n);
    {
      std::vector<VertexId> targets(perm.begin(), perm.end());
      std::size_t i = 0;
      while (i < n) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        std::sort(targets.begin() + static_cast<std::ptrdiff_t>(i),
                  targets.begin() + static_cast<std::ptrdiff_t>(j));
        for (std::size_t q = i; q < j; ++q) relabel[order[q]] = targets[q];
        i = j;
      }
    }
    std::vector<double> permuted(n);
    for (std::size_t i = 0; i < n; ++i) permuted[relabel[i]] = values[i];
    const std::size_t k = 1 + rng.below(n);
    const auto a = top_k(RankVector(values), k);
    const auto b = top_k(RankVector(permuted), k);
    for (std::size_t i = 0; i < k; ++i) {
      if (relabel[a[i]] != b[i]) {
        ++mismatches;
        break;
      }
    }
  }
  return outcome("exact-rank", "top_k permutation equivariance mismatches", mismatches, "==", 0);
}

// ---- cluster-sim ---------------------------------------------------------

PropertyOutcome edge_coverage(const Context& ctx) {
  double violations = 0;
  for (const auto& [name, g] : ctx.suite) {
    for (auto strategy : {PartitionStrategy::kRandomEdge, PartitionStrategy::kGreedyVertexCut}) {
      for (MachineId machines : {1u, 3u, 8u}) {
        const auto p = partition_graph(g, machines, strategy, ctx.seed(4));
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          const auto succ = g.out_edges(v);
          for (std::size_t i = 0; i < succ.size(); ++i) {
            const MachineId owner = p.edge_owner()[g.edge_begin(v) + i];
            if (!p.holds_replica(v, owner) || !p.holds_replica(succ[i], owner)) ++violations;
          }
          const auto mir = p.mirrors(v);
          if (std::find(mir.begin(), mir.end(), p.master(v)) != mir.end()) ++violations;
        }
      }
    }
  }
  return outcome("cluster-sim", "edge-coverage violations", violations, "==", 0);
}

PropertyOutcome traffic_linearity(const Context& ctx) {
  const auto g = suite_graph("pa200");
  const auto part = partition_graph(g, 8, PartitionStrategy::kRandomEdge, ctx.seed(5));
  double worst = 0.0;
  const int seeds = ctx.full() ? 50 : 20;
  for (double p_s : {0.3, 0.7}) {
    double observed = 0.0, expected = 0.0;
    for (int s = 0; s < seeds; ++s) {
      FrogRunConfig cfg;
      cfg.frogs = 10000;
      cfg.p_s = p_s;
      cfg.erasure = ErasureKind::kIndependent;
      cfg.seed = ctx.seed(200 + s);
      const auto r = run_frogwild(g, part, cfg);
      observed += static_cast<double>(r.ledger.totals().sync_messages);
      expected += p_s * static_cast<double>(r.ledger.totals().mirror_slots);
    }
    worst = std::max(worst, std::abs(observed / expected - 1.0));
  }
  return outcome("cluster-sim", "sync messages vs p_s * mirror slots (relative error)", worst,
                 "<=", 0.05, std::to_string(seeds) + " seeds per p_s");
}

PropertyOutcome thread_determinism(const Context& ctx) {
  const auto g = suite_graph("pa200");
  const auto part = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, ctx.seed(6));
  double mismatches = 0;
  for (double p_s : {0.4, 1.0}) {
    FrogRunConfig cfg;
    cfg.frogs = 20000;
    cfg.p_s = p_s;
    cfg.seed = ctx.seed(7);
    cfg.threads = 1;
    const auto a = run_frogwild(g, part, cfg);
    cfg.threads = 4;
    const auto b = run_frogwild(g, part, cfg);
    if (a.counters != b.counters) ++mismatches;
    if (a.ledger.rows().size() != b.ledger.rows().size()) {
      ++mismatches;
      continue;
    }
    for (std::size_t i = 0; i < a.ledger.rows().size(); ++i) {
      const auto& x = a.ledger.rows()[i];
      const auto& y = b.ledger.rows()[i];
      if (x.sync_messages != y.sync_messages || x.frog_messages != y.frog_messages) ++mismatches;
    }
  }
  return outcome("cluster-sim", "thread-count determinism mismatches", mismatches, "==", 0);
}

PropertyOutcome unpartitioned_walk_fit(const Context& ctx) {
  // On one machine every frog takes an independent uniform out-edge, so the
  // counters are a multinomial sample of the truncated-geometric walk law.
  const auto g = suite_graph("pa200");
  const auto part = partition_graph(g, 1, PartitionStrategy::kRandomEdge, ctx.seed(8));
  FrogRunConfig cfg;
  cfg.frogs = 100000;
  cfg.seed = ctx.seed(9);
  const auto r = run_frogwild(g, part, cfg);
  const auto law = exact_distribution(g, cfg.p_T, cfg.t_max);
  const double p = chi_square_goodness_of_fit(r.counters, law).p_value;
  return outcome("cluster-sim", "single-machine counters fit Q^t u (p)", p, ">=", kAlpha);
}

PropertyOutcome full_sync_equivalence(const Context& ctx) {
  // Binomial scatter keeps every frog's marginal exact, so at p_s = 1 the
  // expected counters do not depend on the partition.
  const auto g = suite_graph("pa200");
  const auto law = exact_distribution(g, kDefaultTeleport, 20);
  double worst = 0.0;
  for (MachineId machines : {1u, 8u}) {
    const auto part = partition_graph(g, machines, PartitionStrategy::kRandomEdge, ctx.seed(10));
    std::vector<std::uint64_t> pooled(g.num_vertices(), 0);
    for (int s = 0; s < 20; ++s) {
      FrogRunConfig cfg;
      cfg.frogs = 10000;
      cfg.scatter = ScatterVariant::kBinomial;
      cfg.seed = ctx.seed(300 + s);
      const auto r = run_frogwild(g, part, cfg);
      for (VertexId v = 0; v < g.num_vertices(); ++v) pooled[v] += r.counters[v];
    }
    worst = std::max(worst, total_variation(pooled, law));
  }
  return outcome("cluster-sim", "p_s=1 counters vs unpartitioned walk law (TV)", worst, "<=",
                 0.03, "binomial scatter, 1 and 8 machines");
}

// ---- frogwild-program ----------------------------------------------------

PropertyOutcome conservation(const Context& ctx) {
  double violations = 0;
  for (const auto& [name, g] : ctx.suite) {
    for (MachineId machines : {1u, 4u}) {
      const auto part = partition_graph(g, machines, PartitionStrategy::kRandomEdge, ctx.seed(11));
      for (double p_s : {0.0, 0.5, 1.0}) {
        for (auto erasure : {ErasureKind::kIndependent, ErasureKind::kAtLeastOneOutEdge}) {
          FrogRunConfig cfg;
          cfg.frogs = 5000;
          cfg.p_s = p_s;
          cfg.erasure = erasure;
          cfg.t_max = 10;
          cfg.seed = ctx.seed(12);
          const auto r = run_frogwild(g, part, cfg);
          if (!r.conserved || r.stopped_total != cfg.frogs) ++violations;
        }
      }
    }
  }
  return outcome("frogwild-program", "frog conservation violations", violations, "==", 0);
}

PropertyOutcome process_equivalence(const Context& ctx) {
  double worst = 1.0;
  for (const auto& [name, g] : ctx.suite) {
    const auto a = walk_fixed_step(g, kDefaultTeleport, 20, 100000, ctx.seed(13));
    const auto b = walk_truncated_geometric(g, kDefaultTeleport, 20, 100000, ctx.seed(14));
    worst = std::min(worst, chi_square_two_sample(a, b).p_value);
  }
  return outcome("frogwild-program", "fixed-step vs truncated-geometric (min p)", worst, ">=",
                 kAlpha);
}

PropertyOutcome marginal_invariance(const Context& ctx) {
  const std::uint64_t reps = ctx.full() ? 100000 : 40000;
  double worst = 1.0;
  for (const char* name : {"five", "pa200"}) {
    const auto g = suite_graph(name);
    std::vector<std::vector<std::uint64_t>> hists;
    for (double p_s : {1.0, 0.7, 0.3}) {
      for (auto kind : {ErasureKind::kIndependent, ErasureKind::kAtLeastOneOutEdge}) {
        std::vector<std::uint64_t> hist(g.num_vertices(), 0);
        const ErasureModel model{kind, p_s};
        for (std::uint64_t r = 0; r < reps; ++r) {
          ++hist[walk_under_erasures(g, model, kDefaultTeleport, 20,
                                     ctx.seed(15) * 7919 + r * 104729 + hists.size())];
        }
        hists.push_back(std::move(hist));
      }
    }
    for (std::size_t i = 1; i < hists.size(); ++i) {
      worst = std::min(worst, chi_square_two_sample(hists[0], hists[i]).p_value);
    }
  }
  return outcome("frogwild-program", "single-walk marginal invariance under erasures (min p)",
                 worst, ">=", kAlpha, std::to_string(reps) + " walks per configuration");
}

PropertyOutcome binomial_outflow(const Context& ctx) {
  const std::uint64_t K = 1000;
  const int trials = 1000;
  KeyedRng rng(ctx.seed(16), RngPurpose::kTest);
  double total = 0.0;
  for (int i = 0; i < trials; ++i) {
    const auto counts = scatter_binomial(K, 4, 1.0, 4, rng);
    total += static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  }
  const double mean = total / trials;
  // Sum of 4 independent Bin(K, 1/4): variance 4 K (1/4)(3/4).
  const double sigma = std::sqrt(4.0 * K * 0.25 * 0.75 / trials);
  return outcome("frogwild-program", "binomial scatter mean outflow deviation (sigmas)",
                 std::abs(mean - K) / sigma, "<=", 3.0);
}

PropertyOutcome ceil_exactness(const Context& ctx) {
  double violations = 0;
  KeyedRng rng(ctx.seed(17), RngPurpose::kTest);
  for (std::uint64_t K = 0; K <= 60; ++K) {
    for (std::size_t M = 1; M <= 12; ++M) {
      const auto shares = scatter_ceil(K, M, rng);
      const auto sum = std::accumulate(shares.begin(), shares.end(), std::uint64_t{0});
      const auto recipients = static_cast<std::uint64_t>(
          std::count_if(shares.begin(), shares.end(), [](std::uint64_t s) { return s > 0; }));
      const std::uint64_t quota = (K + M - 1) / M;
      const bool over = std::any_of(shares.begin(), shares.end(),
                                    [quota](std::uint64_t s) { return s > quota; });
      if (sum != K || recipients != std::min<std::uint64_t>(K, M) || over) ++violations;
    }
  }
  return outcome("frogwild-program", "ceil scatter conservation violations", violations, "==", 0);
}

PropertyOutcome erasure_symmetry(const Context& ctx) {
  const auto g = complete_with_self_loops(3);  // every vertex has 3 out-edges
  double worst = 1.0;
  for (auto kind : {ErasureKind::kIndependent, ErasureKind::kAtLeastOneOutEdge}) {
    const ErasureModel model{kind, 0.4};
    std::vector<std::uint64_t> by_mask(8, 0);
    for (std::uint64_t step = 0; step < 100000; ++step) {
      const auto mask = enabled_edges(g, model, 0, step, ctx.seed(18));
      ++by_mask[mask[0] | (mask[1] << 1) | (mask[2] << 2)];
    }
    // Masks with one enabled edge: 1, 2, 4. With two: 3, 5, 6.
    for (const auto& cls : {std::vector<int>{1, 2, 4}, std::vector<int>{3, 5, 6}}) {
      std::vector<std::uint64_t> obs;
      for (int m : cls) obs.push_back(by_mask[m]);
      const std::vector<double> uniform(3, 1.0 / 3.0);
      worst = std::min(worst, chi_square_goodness_of_fit(obs, uniform).p_value);
    }
  }
  return outcome("frogwild-program", "erasure symmetry within subset size (min p)", worst, ">=",
                 kAlpha);
}

// ---- metrics -------------------------------------------------------------

PropertyOutcome mass_optimality(const Context& ctx) {
  double violations = 0;
  KeyedRng rng(ctx.seed(19), RngPurpose::kTest);
  const auto g = suite_graph("pa200");
  const auto pi = dense_oracle(g);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(pi.size());
    for (auto& x : v) x = rng.uniform();
    const std::size_t k = 1 + rng.below(pi.size());
    if (mass_captured(RankVector(v), pi, k) > mass_captured(pi, pi, k) + 1e-15) ++violations;
  }
  return outcome("metrics", "captured mass exceeds optimum", violations, "==", 0);
}

PropertyOutcome monotone_invariance(const Context& ctx) {
  double violations = 0;
  KeyedRng rng(ctx.seed(20), RngPurpose::kTest);
  const auto pi = dense_oracle(suite_graph("pa200"));
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(pi.size()), w(pi.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = rng.uniform();
      w[i] = std::exp(3.0 * v[i]) + 7.0;  // strictly increasing map
    }
    const std::size_t k = 1 + rng.below(pi.size());
    if (mass_captured(RankVector(v), pi, k) != mass_captured(RankVector(w), pi, k)) ++violations;
  }
  return outcome("metrics", "captured mass changes under monotone maps", violations, "==", 0);
}

PropertyOutcome estimator_simplex(const Context& ctx) {
  const auto g = suite_graph("pa200");
  const auto part = partition_graph(g, 4, PartitionStrategy::kGreedyVertexCut, ctx.seed(21));
  double worst = 0.0;
  for (int s = 0; s < 5; ++s) {
    FrogRunConfig cfg;
    cfg.frogs = 1000 + 997 * static_cast<std::uint64_t>(s);
    cfg.p_s = 0.7;
    cfg.seed = ctx.seed(400 + s);
    const auto r = run_frogwild(g, part, cfg);
    RankVector est;
    if (ctx.options.corrupt_estimator) {
      std::vector<double> values(r.counters.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = static_cast<double>(r.counters[i]) / static_cast<double>(cfg.frogs + 1);
      }
      est = RankVector(std::move(values));
    } else {
      est = estimator(r.counters, cfg.frogs);
    }
    double neg = 0.0;
    for (double x : est.values()) neg = std::max(neg, -x);
    worst = std::max({worst, std::abs(est.sum() - 1.0), neg});
  }
  return outcome("metrics", "estimator distance from simplex", worst, "<=", 1e-12);
}

PropertyOutcome intersection_bound_check(const Context& ctx) {
  const std::uint64_t trials = ctx.full() ? 1000000 : 100000;
  double worst = -1.0;
  for (const auto& [name, g] : ctx.suite) {
    const auto pi = dense_oracle(g);
    for (std::uint32_t t : {1u, 5u, 20u}) {
      const auto mc = intersection_probability_mc(g, kDefaultTeleport, t, trials, ctx.seed(22 + t));
      const double bound = intersection_bound(g.num_vertices(), t, pi.max(), kDefaultTeleport);
      worst = std::max(worst, mc.upper - bound);
    }
  }
  return outcome("metrics", "Wilson upper limit minus meeting bound (max)", worst, "<=", 0.0,
                 std::to_string(trials) + " pairs per (graph, t)");
}

PropertyOutcome accuracy_bound_rate(const Context& ctx) {
  const auto g = suite_graph("pa200");
  const auto pi = dense_oracle(g);
  const std::size_t k = 10;
  const double delta = 0.1;
  const double optimum = mass_captured(pi, pi, k);
  const auto hint = sample_size_hint(k, optimum, kDefaultTeleport);
  const double p_meet =
      std::min(1.0, intersection_bound(g.num_vertices(), hint.steps, pi.max(), kDefaultTeleport));
  const auto part = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, ctx.seed(23));
  double worst = 0.0;
  for (double p_s : {0.4, 0.7, 1.0}) {
    const double eps = epsilon_bound({kDefaultTeleport, hint.steps, k, delta, hint.frogs, p_s, p_meet});
    int failures = 0;
    for (int s = 0; s < 100; ++s) {
      FrogRunConfig cfg;
      cfg.frogs = hint.frogs;
      cfg.t_max = hint.steps;
      cfg.p_s = p_s;
      cfg.seed = ctx.seed(500 + s);
      const auto r = run_frogwild(g, part, cfg);
      if (mass_captured(estimator(r.counters, cfg.frogs), pi, k) < optimum - eps) ++failures;
    }
    worst = std::max(worst, failures / 100.0);
  }
  return outcome("metrics", "failure rate of the captured-mass bound (max over p_s)", worst, "<=",
                 delta + 0.05, "100 seeds per p_s in {0.4,0.7,1.0}");
}

}  // namespace

std::vector<PropertyOutcome> run_verification(const VerifyOptions& options) {
  Context ctx{options, small_graph_suite()};
  using Check = PropertyOutcome (*)(const Context&);
  std::vector<std::pair<const char*, Check>> checks = {
      {"graph-core", step_sums},           {"graph-core", step_support},
      {"graph-core", sample_step_fit},     {"exact-rank", oracle_agreement},
      {"exact-rank", mixing_decay},        {"exact-rank", residual_monotone},
      {"exact-rank", top_k_equivariance},  {"cluster-sim", edge_coverage},
      {"cluster-sim", traffic_linearity},  {"cluster-sim", thread_determinism},
      {"cluster-sim", unpartitioned_walk_fit}, {"cluster-sim", full_sync_equivalence},
      {"frogwild-program", conservation},  {"frogwild-program", process_equivalence},
      {"frogwild-program", marginal_invariance}, {"frogwild-program", binomial_outflow},
      {"frogwild-program", ceil_exactness}, {"frogwild-program", erasure_symmetry},
      {"metrics", mass_optimality},        {"metrics", monotone_invariance},
      {"metrics", estimator_simplex},      {"metrics", intersection_bound_check},
  };
  if (options.suite == VerifySuite::kFull) checks.emplace_back("metrics", accuracy_bound_rate);

  std::vector<PropertyOutcome> out;
  for (const auto& [module, check] : checks) {
    try {
      out.push_back(check(ctx));
    } catch (const std::exception& e) {
      PropertyOutcome o;
      o.module = module;
      o.property = "check raised an error";
      o.comparator = "==";
      o.detail = e.what();
      out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace frogwild
