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

#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace frogwild::cli {

namespace {

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_double(v[i]);
  }
  return s;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(std::string(name) + " must lie in [0, 1], got " + format_double(p));
  }
}

void check_one_of(const std::string& v, std::initializer_list<const char*> allowed,
                  const char* name) {
  for (const char* a : allowed) {
    if (v == a) return;
  }
  std::string msg = std::string(name) + " must be one of";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw ConfigError(msg + ", got '" + v + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    throw ConfigError("not a finite number: '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view s, std::uint64_t max) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v > max) {
    throw ConfigError("not an integer in [0, " + std::to_string(max) + "]: '" + std::string(s) +
                      "'");
  }
  return v;
}

std::vector<double> parse_double_list(std::string_view s) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_double(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void RunConfig::validate() const {
  check_one_of(command, {"exact", "frogwild", "sweep", "compare-sparsify"}, "command");
  check_one_of(format, {"plain", "snap"}, "format");
  check_one_of(partition, {"greedy", "random"}, "partition");
  check_one_of(scatter, {"ceil", "binomial"}, "scatter");
  check_one_of(erasure, {"independent", "at-least-one"}, "erasure");
  check_one_of(axis, {"ps", "frogs", "iters", "machines"}, "axis");
  if (graph.empty()) throw ConfigError("graph must be set");
  check_probability(p_s, "p_s");
  check_probability(p_T, "p_T");
  if (machines == 0) throw ConfigError("machines must be positive");
  if (frogs == 0) throw ConfigError("frogs must be positive");
  if (iters && *iters == 0) throw ConfigError("iters must be positive");
  if (k == 0) throw ConfigError("k must be positive");
  if (seeds == 0) throw ConfigError("seeds must be positive");
  if (pr_iters == 0) throw ConfigError("pr_iters must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (threads == 0) throw ConfigError("threads must be positive");
  if (command == "sweep") {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    for (double v : values) {
      if (axis == "ps") {
        check_probability(v, "p_s");
      } else if (!(v >= 1.0 && v == std::floor(v) && v <= 4294967295.0)) {
        throw ConfigError(axis + " values must be positive integers, got " + format_double(v));
      }
    }
  }
  if (command == "compare-sparsify") {
    if (keep.empty()) throw ConfigError("compare-sparsify needs at least one keep probability");
    for (double q : keep) {
      if (!(q > 0.0 && q <= 1.0)) {
        throw ConfigError("keep must lie in (0, 1], got " + format_double(q));
      }
    }
  }
}

std::string RunConfig::serialize() const {
  std::ostringstream os;
  os << "command=" << command << '\n'
     << "graph=" << graph << '\n'
     << "format=" << format << '\n'
     << "machines=" << machines << '\n'
     << "partition=" << partition << '\n'
     << "ps=" << format_double(p_s) << '\n'
     << "pt=" << format_double(p_T) << '\n'
     << "frogs=" << frogs << '\n'
     << "iters=" << (iters ? std::to_string(*iters) : std::string()) << '\n'
     << "k=" << k << '\n'
     << "seed=" << seed << '\n'
     << "scatter=" << scatter << '\n'
     << "erasure=" << erasure << '\n'
     << "delta=" << format_double(delta) << '\n'
     << "tol=" << format_double(tol) << '\n'
     << "axis=" << axis << '\n'
     << "values=" << join(values) << '\n'
     << "seeds=" << seeds << '\n'
     << "keep=" << join(keep) << '\n'
     << "pr_iters=" << pr_iters << '\n';
  return os.str();
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig c;
  std::map<std::string, bool> seen;
  constexpr auto u32 = std::numeric_limits<std::uint32_t>::max();
  constexpr auto u64 = std::numeric_limits<std::uint64_t>::max();
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(line.substr(0, eq));
    const std::string_view value = line.substr(eq + 1);
    if (seen[key]) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key " + key);
    seen[key] = true;
    try {
      if (key == "command") c.command = value;
      else if (key == "graph") c.graph = value;
      else if (key == "format") c.format = value;
      else if (key == "machines") c.machines = static_cast<std::uint32_t>(parse_uint(value, u32));
      else if (key == "partition") c.partition = value;
      else if (key == "ps") c.p_s = parse_double(value);
      else if (key == "pt") c.p_T = parse_double(value);
      else if (key == "frogs") c.frogs = parse_uint(value, u64);
      else if (key == "iters") {
        c.iters.reset();
        if (!value.empty()) c.iters = static_cast<std::uint32_t>(parse_uint(value, u32));
      }
      else if (key == "k") c.k = static_cast<std::uint32_t>(parse_uint(value, u32));
      else if (key == "seed") c.seed = parse_uint(value, u64);
      else if (key == "scatter") c.scatter = value;
      else if (key == "erasure") c.erasure = value;
      else if (key == "delta") c.delta = parse_double(value);
      else if (key == "tol") c.tol = parse_double(value);
      else if (key == "axis") c.axis = value;
      else if (key == "values") c.values = parse_double_list(value);
      else if (key == "seeds") c.seeds = static_cast<std::uint32_t>(parse_uint(value, u32));
      else if (key == "keep") c.keep = parse_double_list(value);
      else if (key == "pr_iters") c.pr_iters = static_cast<std::uint32_t>(parse_uint(value, u32));
      else throw ConfigError("unknown key " + key);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return c;
}

bool RunConfig::operator==(const RunConfig& o) const {
  return serialize() == o.serialize();
}

}  // namespace frogwild::cli
