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

// frogwild: command-line front end over the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "frogwild/frogwild.h"
#include "run_config.hpp"

namespace fs = std::filesystem;
using frogwild::cli::ConfigError;
using frogwild::cli::RunConfig;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

class ApiError : public std::runtime_error {
 public:
  ApiError(fw_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  fw_status status() const { return status_; }

 private:
  fw_status status_;
};

void check(fw_status s, const char* what) {
  if (s != FW_OK) {
    throw ApiError(s, std::string(what) + ": " + fw_status_name(s) + ": " + fw_last_error());
  }
}

struct GraphDeleter {
  void operator()(fw_graph* g) const { fw_graph_free(g); }
};
struct PartitionDeleter {
  void operator()(fw_partition* p) const { fw_partition_free(p); }
};
struct RunDeleter {
  void operator()(fw_frog_run* r) const { fw_frog_run_free(r); }
};
struct ReportDeleter {
  void operator()(fw_verify_report* r) const { fw_verify_free(r); }
};
using GraphPtr = std::unique_ptr<fw_graph, GraphDeleter>;
using PartitionPtr = std::unique_ptr<fw_partition, PartitionDeleter>;
using RunPtr = std::unique_ptr<fw_frog_run, RunDeleter>;
using ReportPtr = std::unique_ptr<fw_verify_report, ReportDeleter>;

std::string fmt17(double v) { return frogwild::cli::format_double(v); }

// ---- graphs ---------------------------------------------------------------

GraphPtr load_graph(const RunConfig& cfg) {
  fw_graph* g = nullptr;
  const std::string prefix = "suite:";
  if (cfg.graph.rfind(prefix, 0) != 0) {
    check(fw_graph_load(cfg.graph.c_str(), cfg.format == "snap" ? FW_FORMAT_SNAP : FW_FORMAT_PLAIN,
                        &g),
          "loading graph");
    return GraphPtr(g);
  }
  const std::string name = cfg.graph.substr(prefix.size());
  const char* cache = std::getenv("FROGWILD_SUITE_DIR");
  if (cache == nullptr || *cache == '\0') {
    check(fw_graph_suite(name.c_str(), &g), "building suite graph");
    return GraphPtr(g);
  }
  const fs::path path = fs::path(cache) / (name + ".edges");
  if (fs::exists(path)) {
    check(fw_graph_load(path.c_str(), FW_FORMAT_PLAIN, &g), "loading cached suite graph");
    return GraphPtr(g);
  }
  check(fw_graph_suite(name.c_str(), &g), "building suite graph");
  GraphPtr owned(g);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  // Write then rename so a concurrent reader never sees a partial file.
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  if (!ec && fw_graph_write_edge_list(owned.get(), tmp.c_str()) == FW_OK) {
    fs::rename(tmp, path, ec);
  } else {
    fs::remove(tmp, ec);
  }
  return owned;
}

fw_graph_info info_of(const fw_graph* g) {
  fw_graph_info info{};
  check(fw_graph_get_info(g, &info), "graph info");
  return info;
}

PartitionPtr make_partition(const fw_graph* g, std::uint32_t machines, const RunConfig& cfg,
                            std::uint64_t seed) {
  fw_partition* p = nullptr;
  check(fw_partition_create(g, machines,
                            cfg.partition == "random" ? FW_PARTITION_RANDOM : FW_PARTITION_GREEDY,
                            seed, &p),
        "partitioning graph");
  return PartitionPtr(p);
}

// Reference PageRank for accuracy reports: dense solve on small graphs,
// tight power iteration otherwise. Empty when no reference can be computed.
std::vector<double> reference_rank(const fw_graph* g, double p_T) {
  const auto n = info_of(g).vertices;
  std::vector<double> pi(n);
  if (n <= 2000 && fw_pagerank_dense(g, p_T, pi.data()) == FW_OK) return pi;
  fw_power_info pinfo{};
  if (fw_pagerank_power(g, p_T, 1e-10, 100000, pi.data(), &pinfo) == FW_OK) return pi;
  std::cerr << "warning: no exact reference (" << fw_last_error() << "); accuracy skipped\n";
  return {};
}

// ---- outputs --------------------------------------------------------------

class OutputDir {
 public:
  explicit OutputDir(const std::string& dir) : dir_(dir.empty() ? "." : dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw ApiError(FW_ERR_IO, "cannot create " + dir_.string() + ": " + ec.message());
  }

  std::string path(const std::string& name) {
    files_.push_back(name);
    return (dir_ / name).string();
  }

  void write_text(const std::string& name, const std::string& text) {
    const auto p = path(name);
    std::ofstream os(p, std::ios::binary);
    os << text;
    if (!os) throw ApiError(FW_ERR_IO, "cannot write " + p);
  }

  void write_manifest(const RunConfig& cfg) {
    std::string text = "# frogwild manifest\n";
    text += cfg.serialize();
    for (const auto& f : files_) text += "# output: " + f + "\n";
    write_text("manifest.txt", text);
  }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

const char* kAccuracyHeader = "k,mass,normalized_mass,exact_id,epsilon_bound,bound_ok";

std::string accuracy_fields(const fw_accuracy_report& r) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%d", r.k, r.mass_captured,
                r.normalized_mass, r.exact_identification, r.epsilon_bound, r.bound_satisfied);
  return buf;
}

std::string traffic_fields(const fw_traffic_row& t) {
  return std::to_string(t.sync_messages) + "," + std::to_string(t.frog_messages) + "," +
         std::to_string(t.bytes);
}

fw_byte_costs default_costs() {
  fw_frog_config d;
  fw_frog_config_default(&d);
  return d.costs;
}

// ---- frogwild -------------------------------------------------------------

struct FrogOutcome {
  std::vector<std::uint64_t> counters;
  std::vector<double> estimate;
  std::vector<fw_traffic_row> rows;
  fw_traffic_row totals{};
  bool has_accuracy = false;
  fw_accuracy_report accuracy{};
};

FrogOutcome run_one(const fw_graph* g, const std::vector<double>& pi, const RunConfig& cfg,
                    std::uint32_t machines, double p_s, std::uint64_t frogs, std::uint32_t steps,
                    std::uint64_t seed) {
  const auto n = info_of(g).vertices;
  const auto part = make_partition(g, machines, cfg, seed);
  fw_frog_config fc;
  fw_frog_config_default(&fc);
  fc.frogs = frogs;
  fc.p_t = cfg.p_T;
  fc.t_max = steps;
  fc.p_s = p_s;
  fc.scatter = cfg.scatter == "binomial" ? FW_SCATTER_BINOMIAL : FW_SCATTER_CEIL;
  fc.erasure = cfg.erasure == "independent" ? FW_ERASURE_INDEPENDENT : FW_ERASURE_AT_LEAST_ONE;
  fc.seed = seed;
  fc.threads = cfg.threads;
  fw_frog_run* raw = nullptr;
  check(fw_frogwild_run(g, part.get(), &fc, &raw), "running FrogWild");
  RunPtr run(raw);
  if (!fw_frog_run_conserved(run.get()) && fc.scatter == FW_SCATTER_CEIL) {
    throw ApiError(FW_ERR_INTERNAL, "frog conservation violated");
  }

  FrogOutcome out;
  out.counters.resize(n);
  check(fw_frog_run_counters(run.get(), out.counters.data()), "reading counters");
  out.rows.resize(fw_frog_run_supersteps(run.get()));
  check(fw_frog_run_traffic(run.get(), out.rows.data()), "reading traffic");
  check(fw_frog_run_totals(run.get(), &out.totals), "reading totals");

  // Binomial scatter conserves frogs only in expectation, so normalize by the
  // number that actually stopped.
  const std::uint64_t stopped = fw_frog_run_stopped_total(run.get());
  out.estimate.assign(n, 0.0);
  if (stopped > 0) {
    check(fw_estimator(out.counters.data(), n, stopped, out.estimate.data()), "estimator");
  }
  if (!pi.empty()) {
    const double pi_max = *std::max_element(pi.begin(), pi.end());
    double p_meet = 1.0;
    double epsilon = INFINITY;
    if (fw_intersection_bound(n, steps, pi_max, cfg.p_T, &p_meet) == FW_OK) {
      p_meet = std::min(1.0, p_meet);
      const fw_bound_inputs in{cfg.p_T, steps, cfg.k, cfg.delta, std::max<std::uint64_t>(stopped, 1),
                               p_s, p_meet};
      if (fw_epsilon_bound(&in, &epsilon) != FW_OK) epsilon = INFINITY;
    }
    const std::size_t k = std::min<std::size_t>(cfg.k, n);
    check(fw_accuracy(out.estimate.data(), pi.data(), n, k, epsilon, &out.accuracy), "accuracy");
    out.has_accuracy = true;
  }
  return out;
}

int cmd_frogwild(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto n = info_of(g.get()).vertices;
  const auto pi = reference_rank(g.get(), cfg.p_T);
  const auto r = run_one(g.get(), pi, cfg, cfg.machines, cfg.p_s, cfg.frogs, cfg.steps(), cfg.seed);

  OutputDir out(cfg.out);
  std::vector<std::uint64_t> labels(n);
  check(fw_graph_labels(g.get(), labels.data()), "labels");
  std::string counters = "vertex,c\n";
  for (std::uint32_t v = 0; v < n; ++v) {
    counters += std::to_string(labels[v]) + "," + std::to_string(r.counters[v]) + "\n";
  }
  out.write_text("counters.csv", counters);
  check(fw_write_scores_csv(out.path("scores.csv").c_str(), g.get(), r.estimate.data()),
        "writing scores");
  if (r.has_accuracy) {
    out.write_text("accuracy.csv",
                   std::string(kAccuracyHeader) + "\n" + accuracy_fields(r.accuracy) + "\n");
  }
  check(fw_write_traffic_csv(out.path("traffic.csv").c_str(), r.rows.data(), r.rows.size()),
        "writing traffic");
  out.write_manifest(cfg);

  std::cout << "frogs " << cfg.frogs << ", supersteps " << r.rows.size() << ", sync "
            << r.totals.sync_messages << ", frog messages " << r.totals.frog_messages
            << ", bytes " << r.totals.bytes << "\n";
  if (r.has_accuracy) {
    std::cout << "k " << r.accuracy.k << ": mass " << fmt17(r.accuracy.mass_captured)
              << ", normalized " << fmt17(r.accuracy.normalized_mass) << ", exact id "
              << fmt17(r.accuracy.exact_identification) << "\n";
  }
  return 0;
}

// ---- exact ----------------------------------------------------------------

int cmd_exact(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto n = info_of(g.get()).vertices;
  std::vector<double> scores(n);
  fw_power_info pinfo{};
  const std::uint32_t cap = cfg.iters.value_or(100000);
  const fw_status s = fw_pagerank_power(g.get(), cfg.p_T, cfg.tol, cap, scores.data(), &pinfo);
  if (s == FW_ERR_NOT_CONVERGED && cfg.iters) {
    std::cerr << "note: stopped at the iteration cap, residual " << fmt17(pinfo.residual) << "\n";
  } else {
    check(s, "power iteration");
  }
  const auto part = make_partition(g.get(), cfg.machines, cfg, cfg.seed);
  std::vector<fw_traffic_row> rows(pinfo.iterations);
  check(fw_baseline_traffic(g.get(), part.get(), pinfo.iterations, default_costs(), rows.data()),
        "baseline traffic");

  OutputDir out(cfg.out);
  check(fw_write_scores_csv(out.path("scores.csv").c_str(), g.get(), scores.data()),
        "writing scores");
  check(fw_write_traffic_csv(out.path("traffic.csv").c_str(), rows.data(), rows.size()),
        "writing traffic");
  out.write_manifest(cfg);
  std::cout << "iterations " << pinfo.iterations << ", residual " << fmt17(pinfo.residual)
            << (pinfo.converged ? ", converged\n" : ", not converged\n");
  return 0;
}

// ---- sweep ----------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto pi = reference_rank(g.get(), cfg.p_T);
  std::string csv = "axis,value,seed," + std::string(kAccuracyHeader) +
                    ",sync_messages,frog_messages,bytes\n";
  for (double value : cfg.values) {
    for (std::uint32_t i = 0; i < cfg.seeds; ++i) {
      const std::uint64_t seed = cfg.seed + i;
      std::uint32_t machines = cfg.machines, steps = cfg.steps();
      double p_s = cfg.p_s;
      std::uint64_t frogs = cfg.frogs;
      if (cfg.axis == "ps") p_s = value;
      else if (cfg.axis == "frogs") frogs = static_cast<std::uint64_t>(value);
      else if (cfg.axis == "iters") steps = static_cast<std::uint32_t>(value);
      else machines = static_cast<std::uint32_t>(value);
      const auto r = run_one(g.get(), pi, cfg, machines, p_s, frogs, steps, seed);
      fw_accuracy_report acc = r.accuracy;
      if (!r.has_accuracy) acc = {std::min<std::size_t>(cfg.k, r.counters.size()), NAN, NAN, NAN, NAN, 0};
      csv += cfg.axis + "," + fmt17(value) + "," + std::to_string(seed) + "," +
             accuracy_fields(acc) + "," + traffic_fields(r.totals) + "\n";
    }
  }
  OutputDir out(cfg.out);
  out.write_text("sweep.csv", csv);
  out.write_manifest(cfg);
  std::cout << cfg.values.size() * cfg.seeds << " runs written to sweep.csv\n";
  return 0;
}

// ---- compare-sparsify -----------------------------------------------------

int cmd_compare_sparsify(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto n = info_of(g.get()).vertices;
  const auto pi = reference_rank(g.get(), cfg.p_T);
  std::string csv = "keep,seed,iterations," + std::string(kAccuracyHeader) +
                    ",sync_messages,frog_messages,bytes,scores_file\n";
  OutputDir out(cfg.out);
  std::size_t row = 0;
  for (double q : cfg.keep) {
    for (std::uint32_t i = 0; i < cfg.seeds; ++i) {
      const std::uint64_t seed = cfg.seed + i;
      fw_graph* raw = nullptr;
      check(fw_graph_sparsify(g.get(), q, seed, &raw), "sparsifying graph");
      GraphPtr h(raw);
      std::vector<double> scores(n);
      fw_power_info pinfo{};
      const fw_status s =
          fw_pagerank_power(h.get(), cfg.p_T, cfg.tol, cfg.pr_iters, scores.data(), &pinfo);
      if (s != FW_ERR_NOT_CONVERGED) check(s, "power iteration");
      const auto part = make_partition(h.get(), cfg.machines, cfg, seed);
      std::vector<fw_traffic_row> rows(pinfo.iterations);
      check(fw_baseline_traffic(h.get(), part.get(), pinfo.iterations, default_costs(),
                                rows.data()),
            "baseline traffic");
      fw_traffic_row totals{pinfo.iterations, 0, 0, 0};
      for (const auto& r : rows) {
        totals.sync_messages += r.sync_messages;
        totals.frog_messages += r.frog_messages;
        totals.bytes += r.bytes;
      }
      fw_accuracy_report acc{std::min<std::size_t>(cfg.k, n), NAN, NAN, NAN, NAN, 0};
      if (!pi.empty()) {
        check(fw_accuracy(scores.data(), pi.data(), n, acc.k, 0.0, &acc), "accuracy");
      }
      const std::string scores_file = "scores_" + std::to_string(++row) + ".csv";
      check(fw_write_scores_csv(out.path(scores_file).c_str(), g.get(), scores.data()),
            "writing scores");
      csv += fmt17(q) + "," + std::to_string(seed) + "," + std::to_string(pinfo.iterations) +
             "," + accuracy_fields(acc) + "," + traffic_fields(totals) + "," + scores_file + "\n";
    }
  }
  out.write_text("compare.csv", csv);
  out.write_manifest(cfg);
  std::cout << cfg.keep.size() * cfg.seeds << " runs written to compare.csv\n";
  return 0;
}

// ---- verify ---------------------------------------------------------------

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool corrupt, const std::string& dir) {
  fw_verify_report* raw = nullptr;
  check(fw_verify_run(suite == "full" ? FW_SUITE_FULL : FW_SUITE_FAST, seed,
                      corrupt ? FW_VERIFY_CORRUPT_ESTIMATOR : 0u, &raw),
        "verification");
  ReportPtr report(raw);
  std::string csv = "module,property,statistic,comparator,threshold,verdict,detail\n";
  for (std::size_t i = 0; i < fw_verify_count(report.get()); ++i) {
    fw_property_result r{};
    check(fw_verify_get(report.get(), i, &r), "verification result");
    const std::string verdict =
        std::string(r.comparator) == "advisory" ? "advisory" : (r.passed ? "pass" : "FAIL");
    csv += csv_quote(r.module) + "," + csv_quote(r.property) + "," + fmt17(r.statistic) + "," +
           r.comparator + "," + fmt17(r.threshold) + "," + verdict + "," + csv_quote(r.detail) +
           "\n";
  }
  std::cout << csv;
  if (!dir.empty()) {
    OutputDir out(dir);
    out.write_text("verify.csv", csv);
  }
  const bool ok = fw_verify_all_passed(report.get()) != 0;
  std::cerr << (ok ? "all properties passed\n" : "some properties FAILED\n");
  return ok ? 0 : kExitVerifyFailed;
}

int dispatch(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "exact") return cmd_exact(cfg);
  if (cfg.command == "frogwild") return cmd_frogwild(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  return cmd_compare_sparsify(cfg);
}

void add_common(CLI::App* app, RunConfig& c, std::string& iters) {
  app->add_option("--graph", c.graph, "edge-list path or suite:<name>")->capture_default_str();
  app->add_option("--format", c.format, "plain or snap")
      ->check(CLI::IsMember({"plain", "snap"}))->capture_default_str();
  app->add_option("--machines", c.machines, "simulated machines")->capture_default_str();
  app->add_option("--partition", c.partition, "greedy or random")
      ->check(CLI::IsMember({"greedy", "random"}))->capture_default_str();
  app->add_option("--ps", c.p_s, "mirror synchronization probability")->capture_default_str();
  app->add_option("--pt", c.p_T, "teleport probability")->capture_default_str();
  app->add_option("--frogs", c.frogs, "initial frogs")->capture_default_str();
  app->add_option("--iters", iters,
                  "FrogWild supersteps (default 20) or power-iteration cap (default none)");
  app->add_option("--k", c.k, "top-k size")->capture_default_str();
  app->add_option("--seed", c.seed, "random seed")->capture_default_str();
  app->add_option("--scatter", c.scatter, "ceil or binomial")
      ->check(CLI::IsMember({"ceil", "binomial"}))->capture_default_str();
  app->add_option("--erasure", c.erasure, "independent or at-least-one")
      ->check(CLI::IsMember({"independent", "at-least-one"}))->capture_default_str();
  app->add_option("--delta", c.delta, "failure probability of the accuracy bound")
      ->capture_default_str();
  app->add_option("--tol", c.tol, "power-iteration l1 tolerance")->capture_default_str();
  app->add_option("--out", c.out, "output directory")->capture_default_str();
  app->add_option("--threads", c.threads, "worker threads (results do not depend on it)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FrogWild PageRank simulator"};
  app.set_version_flag("--version", fw_version());
  app.require_subcommand(1);

  RunConfig cfg;
  std::string iters, keep, values;
  auto* exact = app.add_subcommand("exact", "power-iteration PageRank with baseline traffic");
  auto* frog = app.add_subcommand("frogwild", "one FrogWild run");
  auto* sweep = app.add_subcommand("sweep", "FrogWild over a parameter axis and seeds");
  auto* sparse = app.add_subcommand("compare-sparsify", "sparsified power-iteration baseline");
  for (auto* sc : {exact, frog, sweep, sparse}) add_common(sc, cfg, iters);
  sweep->add_option("--axis", cfg.axis, "ps, frogs, iters or machines")
      ->check(CLI::IsMember({"ps", "frogs", "iters", "machines"}))->required();
  sweep->add_option("--values", values, "comma-separated axis values")->required();
  for (auto* sc : {sweep, sparse}) {
    sc->add_option("--seeds", cfg.seeds, "number of consecutive seeds")->capture_default_str();
  }
  sparse->add_option("--keep", keep, "comma-separated edge keep probabilities")->required();
  sparse->add_option("--pr-iters", cfg.pr_iters, "power iterations on the sparsified graph")
      ->capture_default_str();

  std::string manifest, rerun_out;
  unsigned rerun_threads = 1;
  auto* rerun = app.add_subcommand("rerun", "repeat a run from its manifest");
  rerun->add_option("--manifest", manifest, "manifest.txt of an earlier run")->required();
  rerun->add_option("--out", rerun_out, "output directory")->required();
  rerun->add_option("--threads", rerun_threads, "worker threads");

  std::string suite = "fast";
  std::string verify_out;
  std::uint64_t verify_seed = 1;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--suite", suite, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  verify->add_option("--seed", verify_seed, "random seed")->capture_default_str();
  verify->add_option("--out", verify_out, "also write verify.csv here");
  verify->add_flag("--corrupt-estimator", corrupt, "inject an estimator fault");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, verify_seed, corrupt, verify_out);
    if (rerun->parsed()) {
      std::ifstream in(manifest, std::ios::binary);
      if (!in) throw ApiError(FW_ERR_IO, "cannot read " + manifest);
      std::stringstream ss;
      ss << in.rdbuf();
      RunConfig from = RunConfig::parse(ss.str());
      from.out = rerun_out;
      from.threads = rerun_threads;
      return dispatch(from);
    }
    cfg.command = exact->parsed() ? "exact"
                  : frog->parsed() ? "frogwild"
                  : sweep->parsed() ? "sweep"
                                    : "compare-sparsify";
    if (!iters.empty()) {
      cfg.iters = static_cast<std::uint32_t>(frogwild::cli::parse_uint(iters, 0xffffffffULL));
    }
    if (!values.empty()) cfg.values = frogwild::cli::parse_double_list(values);
    if (!keep.empty()) cfg.keep = frogwild::cli::parse_double_list(keep);
    return dispatch(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status() == FW_ERR_INVALID_ARGUMENT ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
