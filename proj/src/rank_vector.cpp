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

#include "frogwild/rank_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "frogwild/error.hpp"

namespace frogwild {

double RankVector::sum() const noexcept {
  // Kahan; long vectors of tiny entries otherwise drift past 1e-12.
  double s = 0.0, comp = 0.0;
  for (double v : values_) {
    const double y = v - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

double RankVector::max() const noexcept {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

bool RankVector::on_simplex(double tol) const noexcept {
  for (double v : values_) {
    if (!(v >= 0.0)) return false;
  }
  return std::abs(sum() - 1.0) <= tol;
}

namespace {
void require_same_size(const RankVector& a, const RankVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "rank vectors differ in length");
  }
}
}  // namespace

double l1_distance(const RankVector& a, const RankVector& b) {
  require_same_size(a, b);
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double linf_distance(const RankVector& a, const RankVector& b) {
  require_same_size(a, b);
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void write_rank_csv(std::ostream& os, const RankVector& v,
                    std::span<const std::uint64_t> labels) {
  os << "vertex,score\n";
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::uint64_t id = labels.empty() ? i : labels[i];
    std::snprintf(buf, sizeof buf, "%llu,%.17g\n",
                  static_cast<unsigned long long>(id), v[i]);
    os << buf;
  }
}

}  // namespace frogwild
