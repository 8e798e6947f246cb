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

#ifndef FROGWILD_TRAFFIC_HPP
#define FROGWILD_TRAFFIC_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace frogwild {

/// Simulated wire sizes. One sync message carries one vertex counter; one frog
/// message carries a destination id and a combined frog count.
struct ByteCosts {
  std::uint64_t sync_bytes = 16;
  std::uint64_t frog_bytes = 24;
};

struct SuperstepTraffic {
  std::uint32_t superstep = 0;
  std::uint64_t sync_messages = 0;
  std::uint64_t frog_messages = 0;  // after combining per (machine, vertex)
  std::uint64_t bytes = 0;

  // Diagnostics, not part of the CSV.
  std::uint64_t active_vertices = 0;
  std::uint64_t mirror_slots = 0;    // sum of |mirrors(v)| over active vertices
  std::uint64_t forced_syncs = 0;    // at-least-one repairs
  std::uint64_t held_payload = 0;    // payload with no synchronized recipient
  std::uint64_t clamped_draws = 0;   // binomial parameters clamped to 1
};

/// Per-superstep message counts of one run. Rows are appended in superstep
/// order; totals are maintained incrementally.
class TrafficLedger {
 public:
  explicit TrafficLedger(ByteCosts costs = {}) : costs_(costs) {}

  void append(SuperstepTraffic row);

  const std::vector<SuperstepTraffic>& rows() const noexcept { return rows_; }
  const SuperstepTraffic& totals() const noexcept { return totals_; }
  const ByteCosts& costs() const noexcept { return costs_; }

  std::uint64_t bytes_for(std::uint64_t sync, std::uint64_t frog) const noexcept {
    return sync * costs_.sync_bytes + frog * costs_.frog_bytes;
  }

  /// "superstep,sync_messages,frog_messages,bytes"
  void write_csv(std::ostream& os) const;

 private:
  ByteCosts costs_;
  std::vector<SuperstepTraffic> rows_;
  SuperstepTraffic totals_;
};

}  // namespace frogwild

#endif  // FROGWILD_TRAFFIC_HPP
