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

#include "frogwild/frogwild.h"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "frogwild/engine.hpp"
#include "frogwild/error.hpp"
#include "frogwild/exact_rank.hpp"
#include "frogwild/frog_program.hpp"
#include "frogwild/graph.hpp"
#include "frogwild/metrics.hpp"
#include "frogwild/partition.hpp"
#include "frogwild/suite.hpp"
#include "frogwild/verify.hpp"

struct fw_graph {
  frogwild::DirectedGraph graph;
};

struct fw_partition {
  const frogwild::DirectedGraph* graph;  // borrowed; must outlive the partition
  frogwild::Partition partition;
};

struct fw_frog_run {
  frogwild::FrogRunResult result;
};

struct fw_verify_report {
  std::vector<frogwild::PropertyOutcome> outcomes;
};

namespace {

using frogwild::Error;
using frogwild::ErrorCode;

thread_local std::string g_last_error;

fw_status fail(fw_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
fw_status guarded(F&& body) {
  try {
    body();
    return FW_OK;
  } catch (const Error& e) {
    return fail(static_cast<fw_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FW_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(FW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FW_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

fw_traffic_row to_row(const frogwild::SuperstepTraffic& t) {
  return {t.superstep, t.sync_messages, t.frog_messages, t.bytes};
}

frogwild::ByteCosts to_costs(fw_byte_costs c) { return {c.sync_bytes, c.frog_bytes}; }

std::ofstream open_out(const char* path) {
  require(path != nullptr, "path is null");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::kIo, std::string("cannot open ") + path + " for writing");
  return os;
}

void close_out(std::ofstream& os, const char* path) {
  os.close();
  if (!os) throw Error(ErrorCode::kIo, std::string("write failed: ") + path);
}

}  // namespace

extern "C" {

const char* fw_version(void) { return "1.0.0"; }

const char* fw_last_error(void) { return g_last_error.c_str(); }

const char* fw_status_name(fw_status status) {
  switch (status) {
    case FW_OK: return "ok";
    case FW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FW_ERR_OUT_OF_RANGE: return "out of range";
    case FW_ERR_IO: return "i/o error";
    case FW_ERR_PARSE: return "parse error";
    case FW_ERR_EMPTY_GRAPH: return "empty graph";
    case FW_ERR_NOT_CONVERGED: return "not converged";
    case FW_ERR_TOO_LARGE: return "too large";
    case FW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

/* ---- graphs ---- */

fw_status fw_graph_load(const char* path, fw_edge_format format, fw_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    const auto fmt = format == FW_FORMAT_SNAP ? frogwild::EdgeListFormat::kSnapWithComments
                                              : frogwild::EdgeListFormat::kPlainPairs;
    *out = new fw_graph{frogwild::load_edge_list(path, fmt)};
  });
}

fw_status fw_graph_from_edges(uint32_t n, const uint32_t* src, const uint32_t* dst, size_t count,
                              fw_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(count == 0 || (src != nullptr && dst != nullptr), "null edge arrays");
    std::vector<frogwild::Edge> edges(count);
    for (size_t i = 0; i < count; ++i) edges[i] = {src[i], dst[i]};
    *out = new fw_graph{frogwild::DirectedGraph::from_edges(n, std::move(edges))};
  });
}

fw_status fw_graph_suite(const char* name, fw_graph** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = new fw_graph{frogwild::suite_graph(name)};
  });
}

fw_status fw_graph_sparsify(const fw_graph* g, double keep, uint64_t seed, fw_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = new fw_graph{frogwild::sparsify(g->graph, keep, seed)};
  });
}

fw_status fw_graph_write_edge_list(const fw_graph* g, const char* path) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    auto os = open_out(path);
    frogwild::write_edge_list(os, g->graph);
    close_out(os, path);
  });
}

fw_status fw_graph_get_info(const fw_graph* g, fw_graph_info* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    out->vertices = g->graph.num_vertices();
    out->edges = g->graph.num_edges();
    out->dangling = g->graph.dangling().size();
    out->duplicates_collapsed = g->graph.duplicates_collapsed();
    out->self_loops = g->graph.self_loops();
  });
}

fw_status fw_graph_labels(const fw_graph* g, uint64_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const auto labels = g->graph.labels();
    std::copy(labels.begin(), labels.end(), out);
  });
}

void fw_graph_free(fw_graph* g) { delete g; }

/* ---- exact PageRank ---- */

fw_status fw_pagerank_power(const fw_graph* g, double p_t, double tol, uint32_t max_iters,
                            double* scores, fw_power_info* info) {
  return guarded([&] {
    require(g != nullptr && scores != nullptr, "null argument");
    const auto r = frogwild::power_iteration(g->graph, p_t, tol, max_iters);
    std::copy(r.rank.values().begin(), r.rank.values().end(), scores);
    if (info != nullptr) *info = {r.iterations, r.residual, r.converged ? 1 : 0};
    if (!r.converged) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "power iteration stopped after %u iterations, residual %.3g",
                    r.iterations, r.residual);
      throw Error(ErrorCode::kNotConverged, buf);
    }
  });
}

fw_status fw_pagerank_dense(const fw_graph* g, double p_t, double* scores) {
  return guarded([&] {
    require(g != nullptr && scores != nullptr, "null argument");
    const auto r = frogwild::dense_oracle(g->graph, p_t);
    std::copy(r.values().begin(), r.values().end(), scores);
  });
}

fw_status fw_top_k(const double* scores, size_t n, size_t k, uint32_t* out) {
  return guarded([&] {
    require(scores != nullptr && (k == 0 || out != nullptr), "null argument");
    const auto ids = frogwild::top_k(frogwild::RankVector({scores, scores + n}), k);
    std::copy(ids.begin(), ids.end(), out);
  });
}

/* ---- partitioning and traffic ---- */

fw_status fw_partition_create(const fw_graph* g, uint32_t machines,
                              fw_partition_strategy strategy, uint64_t seed,
                              fw_partition** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    require(strategy == FW_PARTITION_RANDOM || strategy == FW_PARTITION_GREEDY,
            "unknown partition strategy");
    const auto s = strategy == FW_PARTITION_GREEDY ? frogwild::PartitionStrategy::kGreedyVertexCut
                                                   : frogwild::PartitionStrategy::kRandomEdge;
    *out = new fw_partition{&g->graph, frogwild::partition_graph(g->graph, machines, s, seed)};
  });
}

fw_status fw_partition_get_info(const fw_partition* p, fw_partition_info* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    const auto& part = p->partition;
    const auto& g = *p->graph;
    uint64_t cut = 0;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (part.edge_owner()[e] != part.master(g.edge_target(e))) ++cut;
    }
    out->machines = part.machines();
    out->replication_factor = part.replication_factor();
    out->mirror_slots = part.total_mirror_slots();
    out->cut_edges = cut;
    out->degenerate = part.degenerate() ? 1 : 0;
  });
}

void fw_partition_free(fw_partition* p) { delete p; }

fw_status fw_sync_messages_expectation(const fw_partition* p, double p_s, const uint32_t* active,
                                       size_t count, double* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr && (count == 0 || active != nullptr), "null argument");
    *out = frogwild::sync_messages_expectation(p->partition, p_s, {active, count});
  });
}

fw_status fw_baseline_traffic(const fw_graph* g, const fw_partition* p, uint32_t iterations,
                              fw_byte_costs costs, fw_traffic_row* rows) {
  return guarded([&] {
    require(g != nullptr && p != nullptr && (iterations == 0 || rows != nullptr),
            "null argument");
    require(p->graph == &g->graph, "partition was built for a different graph");
    const auto& part = p->partition;
    uint64_t cut = 0;
    for (std::size_t e = 0; e < g->graph.num_edges(); ++e) {
      if (part.edge_owner()[e] != part.master(g->graph.edge_target(e))) ++cut;
    }
    const uint64_t sync = part.total_mirror_slots();
    const uint64_t frog = cut;
    for (uint32_t i = 0; i < iterations; ++i) {
      rows[i] = {i, sync, frog, sync * costs.sync_bytes + frog * costs.frog_bytes};
    }
  });
}

fw_status fw_write_traffic_csv(const char* path, const fw_traffic_row* rows, size_t count) {
  return guarded([&] {
    require(count == 0 || rows != nullptr, "null rows");
    auto os = open_out(path);
    os << "superstep,sync_messages,frog_messages,bytes\n";
    for (size_t i = 0; i < count; ++i) {
      os << rows[i].superstep << ',' << rows[i].sync_messages << ',' << rows[i].frog_messages
         << ',' << rows[i].bytes << '\n';
    }
    close_out(os, path);
  });
}

fw_status fw_write_scores_csv(const char* path, const fw_graph* g, const double* scores) {
  return guarded([&] {
    require(g != nullptr && scores != nullptr, "null argument");
    auto os = open_out(path);
    const frogwild::RankVector v({scores, scores + g->graph.num_vertices()});
    const auto labels = g->graph.labels();
    frogwild::write_rank_csv(os, v, {labels.begin(), labels.end()});
    close_out(os, path);
  });
}

/* ---- FrogWild ---- */

void fw_frog_config_default(fw_frog_config* out) {
  if (out == nullptr) return;
  const frogwild::FrogRunConfig d;
  out->frogs = d.frogs;
  out->p_t = d.p_T;
  out->t_max = d.t_max;
  out->p_s = d.p_s;
  out->scatter = FW_SCATTER_CEIL;
  out->erasure = FW_ERASURE_AT_LEAST_ONE;
  out->seed = d.seed;
  out->threads = d.threads;
  out->costs = {d.costs.sync_bytes, d.costs.frog_bytes};
}

fw_status fw_frogwild_run(const fw_graph* g, const fw_partition* p, const fw_frog_config* config,
                          fw_frog_run** out) {
  return guarded([&] {
    require(g != nullptr && p != nullptr && config != nullptr && out != nullptr,
            "null argument");
    require(p->graph == &g->graph, "partition was built for a different graph");
    require(config->scatter == FW_SCATTER_CEIL || config->scatter == FW_SCATTER_BINOMIAL,
            "unknown scatter variant");
    require(config->erasure == FW_ERASURE_INDEPENDENT || config->erasure == FW_ERASURE_AT_LEAST_ONE,
            "unknown erasure model");
    frogwild::FrogRunConfig c;
    c.frogs = config->frogs;
    c.p_T = config->p_t;
    c.t_max = config->t_max;
    c.p_s = config->p_s;
    c.scatter = config->scatter == FW_SCATTER_BINOMIAL ? frogwild::ScatterVariant::kBinomial
                                                       : frogwild::ScatterVariant::kCeilDivision;
    c.erasure = config->erasure == FW_ERASURE_INDEPENDENT
                    ? frogwild::ErasureKind::kIndependent
                    : frogwild::ErasureKind::kAtLeastOneOutEdge;
    c.seed = config->seed;
    c.threads = config->threads;
    c.costs = to_costs(config->costs);
    *out = new fw_frog_run{frogwild::run_frogwild(g->graph, p->partition, c)};
  });
}

size_t fw_frog_run_vertices(const fw_frog_run* run) {
  return run == nullptr ? 0 : run->result.counters.size();
}

size_t fw_frog_run_supersteps(const fw_frog_run* run) {
  return run == nullptr ? 0 : run->result.ledger.rows().size();
}

uint64_t fw_frog_run_stopped_total(const fw_frog_run* run) {
  return run == nullptr ? 0 : run->result.stopped_total;
}

int fw_frog_run_conserved(const fw_frog_run* run) {
  return run != nullptr && run->result.conserved ? 1 : 0;
}

fw_status fw_frog_run_counters(const fw_frog_run* run, uint64_t* out) {
  return guarded([&] {
    require(run != nullptr && out != nullptr, "null argument");
    std::copy(run->result.counters.begin(), run->result.counters.end(), out);
  });
}

fw_status fw_frog_run_traffic(const fw_frog_run* run, fw_traffic_row* rows) {
  return guarded([&] {
    require(run != nullptr && rows != nullptr, "null argument");
    const auto& r = run->result.ledger.rows();
    std::transform(r.begin(), r.end(), rows, to_row);
  });
}

fw_status fw_frog_run_totals(const fw_frog_run* run, fw_traffic_row* out) {
  return guarded([&] {
    require(run != nullptr && out != nullptr, "null argument");
    *out = to_row(run->result.ledger.totals());
    out->superstep = static_cast<uint32_t>(run->result.ledger.rows().size());
  });
}

void fw_frog_run_free(fw_frog_run* run) { delete run; }

/* ---- metrics ---- */

fw_status fw_estimator(const uint64_t* counters, size_t n, uint64_t frogs, double* out) {
  return guarded([&] {
    require(counters != nullptr && out != nullptr, "null argument");
    const auto est = frogwild::estimator({counters, n}, frogs);
    std::copy(est.values().begin(), est.values().end(), out);
  });
}

fw_status fw_accuracy(const double* estimate, const double* pi, size_t n, size_t k,
                      double epsilon, fw_accuracy_report* out) {
  return guarded([&] {
    require(estimate != nullptr && pi != nullptr && out != nullptr, "null argument");
    const auto r = frogwild::accuracy_report(frogwild::RankVector({estimate, estimate + n}),
                                             frogwild::RankVector({pi, pi + n}), k, epsilon);
    *out = {r.k, r.mass_captured, r.normalized_mass, r.exact_identification, r.epsilon_bound,
            r.bound_satisfied ? 1 : 0};
  });
}

fw_status fw_epsilon_bound(const fw_bound_inputs* in, double* out) {
  return guarded([&] {
    require(in != nullptr && out != nullptr, "null argument");
    *out = frogwild::epsilon_bound({in->p_t, in->t, in->k, in->delta, in->frogs, in->p_s,
                                    in->p_meet});
  });
}

fw_status fw_intersection_bound(size_t n, uint32_t t, double pi_max, double p_t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = frogwild::intersection_bound(n, t, pi_max, p_t);
  });
}

fw_status fw_intersection_mc(const fw_graph* g, double p_t, uint32_t t, uint64_t trials,
                             uint64_t seed, double* estimate, double* lower, double* upper) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    const auto r = frogwild::intersection_probability_mc(g->graph, p_t, t, trials, seed);
    if (estimate != nullptr) *estimate = r.estimate;
    if (lower != nullptr) *lower = r.lower;
    if (upper != nullptr) *upper = r.upper;
  });
}

fw_status fw_sample_size_hint(size_t k, double mu_k, double p_t, uint32_t* steps,
                              uint64_t* frogs) {
  return guarded([&] {
    const auto h = frogwild::sample_size_hint(k, mu_k, p_t);
    if (steps != nullptr) *steps = h.steps;
    if (frogs != nullptr) *frogs = h.frogs;
  });
}

/* ---- verification ---- */

fw_status fw_verify_run(fw_suite suite, uint64_t seed, uint32_t flags, fw_verify_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(suite == FW_SUITE_FAST || suite == FW_SUITE_FULL, "unknown suite");
    frogwild::VerifyOptions options;
    options.suite = suite == FW_SUITE_FULL ? frogwild::VerifySuite::kFull
                                           : frogwild::VerifySuite::kFast;
    options.seed = seed;
    options.corrupt_estimator = (flags & FW_VERIFY_CORRUPT_ESTIMATOR) != 0;
    *out = new fw_verify_report{frogwild::run_verification(options)};
  });
}

size_t fw_verify_count(const fw_verify_report* report) {
  return report == nullptr ? 0 : report->outcomes.size();
}

fw_status fw_verify_get(const fw_verify_report* report, size_t index, fw_property_result* out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    if (index >= report->outcomes.size()) throw Error(ErrorCode::kOutOfRange, "index past end");
    const auto& o = report->outcomes[index];
    *out = {o.module.c_str(), o.property.c_str(),   o.statistic,   o.comparator.c_str(),
            o.threshold,      o.passed ? 1 : 0,     o.detail.c_str()};
  });
}

int fw_verify_all_passed(const fw_verify_report* report) {
  if (report == nullptr) return 0;
  return std::all_of(report->outcomes.begin(), report->outcomes.end(),
                     [](const frogwild::PropertyOutcome& o) { return o.passed; })
             ? 1
             : 0;
}

void fw_verify_free(fw_verify_report* report) { delete report; }

}  // extern "C"
