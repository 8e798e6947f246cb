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

#ifndef FROGWILD_TOOLS_RUN_CONFIG_HPP
#define FROGWILD_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frogwild::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything that determines the output of one CLI command. The output
/// directory and thread count are not part of the serialized form: the
/// manifest lives in the output directory, and threads never change results.
struct RunConfig {
  std::string command = "frogwild";  // exact | frogwild | sweep | compare-sparsify
  std::string graph = "suite:pa200";
  std::string format = "plain";  // plain | snap
  std::uint32_t machines = 8;
  std::string partition = "greedy";  // greedy | random
  double p_s = 1.0;
  double p_T = 0.15;
  std::uint64_t frogs = 100000;
  std::optional<std::uint32_t> iters;  // unset: t_max 20, or power iteration to tol
  std::uint32_t k = 10;
  std::uint64_t seed = 1;
  std::string scatter = "ceil";           // ceil | binomial
  std::string erasure = "at-least-one";   // independent | at-least-one
  double delta = 0.1;
  double tol = 1e-10;
  // sweep
  std::string axis = "ps";  // ps | frogs | iters | machines
  std::vector<double> values;
  std::uint32_t seeds = 1;
  // compare-sparsify
  std::vector<double> keep;
  std::uint32_t pr_iters = 2;

  std::string out;
  unsigned threads = 1;

  static constexpr std::uint32_t kDefaultSteps = 20;
  std::uint32_t steps() const { return iters.value_or(kDefaultSteps); }

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;

  /// key=value lines in a fixed order; doubles with 17 significant digits.
  std::string serialize() const;
  /// Inverse of serialize(). Unknown keys, duplicate keys and malformed
  /// values throw ConfigError; absent keys keep their defaults.
  static RunConfig parse(std::string_view text);

  bool operator==(const RunConfig& other) const;
};

std::string format_double(double v);
double parse_double(std::string_view s);
std::uint64_t parse_uint(std::string_view s, std::uint64_t max);
std::vector<double> parse_double_list(std::string_view s);

}  // namespace frogwild::cli

#endif  // FROGWILD_TOOLS_RUN_CONFIG_HPP
