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

#include "frogwild/traffic.hpp"

#include <ostream>

namespace frogwild {

void TrafficLedger::append(SuperstepTraffic row) {
  row.bytes = bytes_for(row.sync_messages, row.frog_messages);
  totals_.superstep = row.superstep;
  totals_.sync_messages += row.sync_messages;
  totals_.frog_messages += row.frog_messages;
  totals_.bytes += row.bytes;
  totals_.active_vertices += row.active_vertices;
  totals_.mirror_slots += row.mirror_slots;
  totals_.forced_syncs += row.forced_syncs;
  totals_.held_payload += row.held_payload;
  totals_.clamped_draws += row.clamped_draws;
  rows_.push_back(row);
}

void TrafficLedger::write_csv(std::ostream& os) const {
  os << "superstep,sync_messages,frog_messages,bytes\n";
  for (const auto& r : rows_) {
    os << r.superstep << ',' << r.sync_messages << ',' << r.frog_messages << ',' << r.bytes
       << '\n';
  }
}

}  // namespace frogwild
