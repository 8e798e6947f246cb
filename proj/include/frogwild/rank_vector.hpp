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

#ifndef FROGWILD_RANK_VECTOR_HPP
#define FROGWILD_RANK_VECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace frogwild {

/// A point on the probability simplex, indexed by dense vertex id.
class RankVector {
 public:
  RankVector() = default;
  explicit RankVector(std::vector<double> values) : values_(std::move(values)) {}

  static RankVector uniform(std::size_t n) {
    return RankVector(std::vector<double>(n, n ? 1.0 / static_cast<double>(n) : 0.0));
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::span<const double> values() const noexcept { return values_; }
  std::vector<double>& mutable_values() noexcept { return values_; }

  double sum() const noexcept;
  double max() const noexcept;

  /// Nonnegative entries summing to one within tol.
  bool on_simplex(double tol = 1e-9) const noexcept;

  friend bool operator==(const RankVector&, const RankVector&) = default;

 private:
  std::vector<double> values_;
};

double l1_distance(const RankVector& a, const RankVector& b);
double linf_distance(const RankVector& a, const RankVector& b);

/// Writes "vertex,score" rows with 17 significant digits. When labels is
/// non-empty, the vertex column carries labels[i] instead of i.
void write_rank_csv(std::ostream& os, const RankVector& v,
                    std::span<const std::uint64_t> labels = {});

}  // namespace frogwild

#endif  // FROGWILD_RANK_VECTOR_HPP
