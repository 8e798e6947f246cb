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

#ifndef FROGWILD_RNG_HPP
#define FROGWILD_RNG_HPP

#include <cstdint>
#include <limits>

namespace frogwild {

/// Purpose tags for keyed streams. Two decisions that share every other key
/// component still draw from unrelated streams when their tags differ.
enum class RngPurpose : std::uint64_t {
  kBirth = 1,
  kDeath = 2,
  kSync = 3,
  kRecipients = 4,
  kEdgeSplit = 5,
  kTeleport = 6,
  kPartition = 7,
  kErasure = 8,
  kWalk = 9,
  kMeeting = 10,
  kSparsify = 11,
  kGenerator = 12,
  kScatter = 13,
  kTest = 99,
};

inline constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based random stream: the state is a pure function of the key
/// (seed, purpose, a, b, c), so outcomes never depend on the order in which
/// streams are created or consumed. The generator itself is xoshiro256**.
/// Satisfies UniformRandomBitGenerator.
class KeyedRng {
 public:
  using result_type = std::uint64_t;

  KeyedRng(std::uint64_t seed, RngPurpose purpose, std::uint64_t a = 0,
           std::uint64_t b = 0, std::uint64_t c = 0) noexcept {
    std::uint64_t h = seed;
    h = mix(h, static_cast<std::uint64_t>(purpose));
    h = mix(h, a);
    h = mix(h, b);
    h = mix(h, c);
    for (auto& word : s_) word = splitmix64(h);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // Lemire's nearly-divisionless rejection.
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Binomial(trials, p) draw. Small trial counts flip coins directly so the
  /// common case stays cheap and exact.
  std::uint64_t binomial(std::uint64_t trials, double p);

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  static constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
    std::uint64_t s = h ^ (v * 0xD6E8FEB86659FD93ULL);
    return splitmix64(s);
  }

  std::uint64_t s_[4];
};

}  // namespace frogwild

#endif  // FROGWILD_RNG_HPP
