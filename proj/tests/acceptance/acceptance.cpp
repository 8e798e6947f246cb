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

// Acceptance run: one PASS/FAIL line per criterion.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frogwild/exact_rank.hpp"
#include "frogwild/frog_program.hpp"
#include "frogwild/metrics.hpp"
#include "frogwild/partition.hpp"
#include "frogwild/stats.hpp"
#include "frogwild/suite.hpp"

namespace fs = std::filesystem;
using namespace frogwild;

namespace {

constexpr double kAlpha = 0.001;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int graphs = 0;
  for (std::uint64_t s = 0; s < 24; ++s) {
    const VertexId n = 20 + static_cast<VertexId>((s * 37) % 181);
    const auto g = s % 3 == 0 ? preferential_attachment(n, 1 + s % 4, 1000 + s)
                              : random_digraph(n, n * (1 + s % 6), 2000 + s);
    worst = std::max(worst, linf_distance(exact_pagerank(g), dense_oracle(g)));
    ++graphs;
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-8 && secs < 10.0,
          fmt("max linf %.3g over %.0f graphs, %.2f s", worst, graphs, secs)};
}

Verdict mixing_bound() {
  double worst = -1.0;
  const double p_T = kDefaultTeleport;
  for (const auto& [name, g] : small_graph_suite()) {
    const auto pi = dense_oracle(g, p_T);
    RankVector x = RankVector::uniform(g.num_vertices());
    for (std::uint32_t t = 0; t <= 40; ++t) {
      const double bound = (1.0 - p_T) / p_T * std::pow(1.0 - p_T, t);
      worst = std::max(worst, chi2_contrast(x, pi) - bound);
      x = apply_teleport_matrix(g, x, p_T);
    }
  }
  return {worst <= 1e-9, fmt("max chi2 minus bound %.3g", worst)};
}

Verdict process_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 1.0;
  for (const auto& [name, g] : small_graph_suite()) {
    const auto a = walk_fixed_step(g, kDefaultTeleport, 20, 100000, 31);
    const auto b = walk_truncated_geometric(g, kDefaultTeleport, 20, 100000, 32);
    worst = std::min(worst, chi_square_two_sample(a, b).p_value);
  }
  const double secs = seconds_since(t0);
  return {worst >= kAlpha && secs < 30.0, fmt("min p %.4f, %.2f s", worst, secs)};
}

Verdict intersection_bound_holds() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = -1.0;
  for (const auto& [name, g] : small_graph_suite()) {
    const auto pi = dense_oracle(g);
    for (std::uint32_t t : {1u, 5u, 20u}) {
      const auto mc = intersection_probability_mc(g, kDefaultTeleport, t, 1000000, 40 + t);
      worst = std::max(worst, mc.upper - intersection_bound(g.num_vertices(), t, pi.max(),
                                                            kDefaultTeleport));
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 0.0 && secs < 60.0,
          fmt("max Wilson upper minus bound %.4f, %.2f s", worst, secs)};
}

Verdict main_bound() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = suite_graph("pa200");
  const auto pi = dense_oracle(g);
  const std::size_t k = 10;
  const double delta = 0.1;
  const double optimum = mass_captured(pi, pi, k);
  const auto hint = sample_size_hint(k, optimum, kDefaultTeleport);
  const double p_meet =
      std::min(1.0, intersection_bound(g.num_vertices(), hint.steps, pi.max(), kDefaultTeleport));
  const auto part = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, 50);
  double worst = 0.0, min_eps = 1e300;
  for (double p_s : {0.4, 0.7, 1.0}) {
    const double eps =
        epsilon_bound({kDefaultTeleport, hint.steps, k, delta, hint.frogs, p_s, p_meet});
    min_eps = std::min(min_eps, eps);
    int failures = 0;
    for (int s = 0; s < 100; ++s) {
      FrogRunConfig cfg;
      cfg.frogs = hint.frogs;
      cfg.t_max = hint.steps;
      cfg.p_s = p_s;
      cfg.seed = 5000 + s;
      const auto r = run_frogwild(g, part, cfg);
      if (mass_captured(estimator(r.counters, r.stopped_total), pi, k) < optimum - eps) {
        ++failures;
      }
    }
    worst = std::max(worst, failures / 100.0);
  }
  const double secs = seconds_since(t0);
  return {worst <= 0.15 && secs < 300.0,
          fmt("max failure rate %.2f (N=%.0f, t=%.0f)", worst, static_cast<double>(hint.frogs),
              hint.steps) +
              fmt(", smallest epsilon %.3f vs optimum %.3f, %.1f s", min_eps, optimum, secs)};
}

Verdict traffic_scaling() {
  const auto g = suite_graph("pa200");
  const auto part = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, 60);

  // Sync messages track p_s times the mirror slots of active vertices.
  double worst_rel = 0.0;
  for (double p_s : {0.3, 0.7}) {
    double observed = 0.0, expected = 0.0;
    for (int s = 0; s < 50; ++s) {
      FrogRunConfig cfg;
      cfg.frogs = 10000;
      cfg.p_s = p_s;
      cfg.erasure = ErasureKind::kIndependent;
      cfg.seed = 600 + s;
      const auto r = run_frogwild(g, part, cfg);
      observed += static_cast<double>(r.ledger.totals().sync_messages);
      expected += p_s * static_cast<double>(r.ledger.totals().mirror_slots);
    }
    worst_rel = std::max(worst_rel, std::abs(observed / expected - 1.0));
  }

  // Power iteration to the baseline tolerance: every mirror synchronizes and
  // every cut edge carries a message on each iteration.
  std::uint32_t iterations = 0;
  exact_pagerank(g, kDefaultTeleport, kBaselineTolerance, 100000, &iterations);
  std::uint64_t cut = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (part.edge_owner()[e] != part.master(g.edge_target(e))) ++cut;
  }
  const double baseline =
      static_cast<double>(iterations) * static_cast<double>(part.total_mirror_slots() + cut);

  double worst_ratio = 0.0;
  for (double p_s : {0.7, 1.0}) {
    FrogRunConfig cfg;
    cfg.frogs = 10000;
    cfg.p_s = p_s;
    cfg.seed = 61;
    const auto r = run_frogwild(g, part, cfg);
    const auto& tot = r.ledger.totals();
    worst_ratio = std::max(
        worst_ratio, static_cast<double>(tot.sync_messages + tot.frog_messages) / baseline);
  }
  return {worst_rel <= 0.05 && worst_ratio <= 0.10,
          fmt("sync relative error %.4f; FrogWild/baseline messages %.3f (baseline %.0f)",
              worst_rel, worst_ratio, baseline)};
}

Verdict accuracy_trend() {
  const auto g = suite_graph("pa200");
  const auto pi = dense_oracle(g);
  const auto part = partition_graph(g, 8, PartitionStrategy::kGreedyVertexCut, 70);
  int mass_ok = 0, id_ok = 0;
  for (int s = 0; s < 30; ++s) {
    FrogRunConfig cfg;
    cfg.frogs = 100000;
    cfg.t_max = 20;
    cfg.p_s = 0.7;
    cfg.seed = 700 + s;
    const auto r = run_frogwild(g, part, cfg);
    const auto est = estimator(r.counters, r.stopped_total);
    const auto rep = accuracy_report(est, pi, 10, 0.0);
    mass_ok += rep.normalized_mass >= 0.9;
    id_ok += rep.exact_identification >= 0.7;
  }
  return {mass_ok >= 27 && id_ok >= 27,
          fmt("normalized mass >= 0.9 on %.0f/30, exact id >= 0.7 on %.0f/30", mass_ok, id_ok)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Verdict conservation_and_determinism() {
  int runs = 0, violations = 0;
  for (const auto& [name, g] : small_graph_suite()) {
    for (MachineId machines : {1u, 3u, 8u}) {
      const auto part = partition_graph(g, machines, PartitionStrategy::kGreedyVertexCut, 80);
      for (double p_s : {0.0, 0.3, 1.0}) {
        for (auto erasure : {ErasureKind::kIndependent, ErasureKind::kAtLeastOneOutEdge}) {
          // Binomial scatter conserves frogs only in expectation.
          for (auto scatter : {ScatterVariant::kCeilDivision}) {
            FrogRunConfig cfg;
            cfg.frogs = 3000;
            cfg.p_s = p_s;
            cfg.erasure = erasure;
            cfg.scatter = scatter;
            cfg.t_max = 12;
            cfg.seed = 81 + runs;
            cfg.threads = 1 + runs % 3;
            const auto r = run_frogwild(g, part, cfg);
            ++runs;
            bool ok = r.conserved && r.stopped_total == cfg.frogs &&
                      r.audits.size() == cfg.t_max + 1;
            for (const auto& a : r.audits) ok = ok && a.total() == cfg.frogs;
            violations += !ok;
          }
        }
      }
    }
  }

  const fs::path dir = fs::temp_directory_path() / ("frogwild_accept_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  int mismatched = 0, failed = 0;
  const std::vector<std::string> commands = {
      "frogwild --graph suite:pa200 --frogs 50000 --ps 0.5 --seed 3",
      "frogwild --graph suite:pa200 --frogs 50000 --ps 0.8 --scatter binomial "
      "--erasure independent --partition random --seed 4",
      "sweep --graph suite:pa200 --frogs 10000 --axis machines --values 1,4,8 --seeds 2"};
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<fs::path> outs;
    for (unsigned threads : {1u, 2u, 8u}) {
      outs.push_back(dir / (std::to_string(c) + "_" + std::to_string(threads)));
      const std::string cmd = std::string(FROGWILD_CLI) + " " + commands[c] + " --threads " +
                              std::to_string(threads) + " --out " + outs.back().string() +
                              " >/dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) ++failed;
    }
    for (const auto& entry : fs::directory_iterator(outs[0])) {
      const auto file = entry.path().filename();
      for (std::size_t i = 1; i < outs.size(); ++i) {
        if (slurp(outs[0] / file) != slurp(outs[i] / file)) ++mismatched;
      }
    }
  }
  fs::remove_all(dir);
  return {violations == 0 && mismatched == 0 && failed == 0,
          fmt("%.0f conservation violations in %.0f runs; ", violations, runs) +
              fmt("%.0f differing files across thread counts, %.0f failed commands", mismatched,
                  failed)};
}

Verdict marginal_invariance() {
  const std::uint64_t reps = 100000;
  double worst = 1.0;
  for (const auto& [name, g] : small_graph_suite()) {
    std::vector<std::vector<std::uint64_t>> hists;
    for (double p_s : {1.0, 0.3}) {
      for (auto kind : {ErasureKind::kIndependent, ErasureKind::kAtLeastOneOutEdge}) {
        std::vector<std::uint64_t> hist(g.num_vertices(), 0);
        const ErasureModel model{kind, p_s};
        const std::uint64_t base = 9000000 + 1000003 * hists.size();
        for (std::uint64_t r = 0; r < reps; ++r) {
          ++hist[walk_under_erasures(g, model, kDefaultTeleport, 20, base + r)];
        }
        hists.push_back(std::move(hist));
      }
    }
    for (std::size_t i = 0; i < hists.size(); ++i) {
      for (std::size_t j = i + 1; j < hists.size(); ++j) {
        worst = std::min(worst, chi_square_two_sample(hists[i], hists[j]).p_value);
      }
    }
  }
  return {worst >= kAlpha, fmt("min pairwise p %.4f over every suite graph", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"mixing bound", mixing_bound},
      {"process equivalence", process_equivalence},
      {"intersection bound", intersection_bound_holds},
      {"main accuracy bound", main_bound},
      {"traffic scaling", traffic_scaling},
      {"accuracy trend", accuracy_trend},
      {"conservation and determinism", conservation_and_determinism},
      {"single-walk marginal invariance", marginal_invariance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": "
              << v.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
