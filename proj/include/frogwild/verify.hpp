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

#ifndef FROGWILD_VERIFY_HPP
#define FROGWILD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace frogwild {

enum class VerifySuite { kFast, kFull };

struct VerifyOptions {
  VerifySuite suite = VerifySuite::kFast;
  std::uint64_t seed = 1;
  /// Divide counters by N + 1 in the estimator check. Used to confirm that
  /// the suite notices a broken estimator.
  bool corrupt_estimator = false;
};

struct PropertyOutcome {
  std::string module;
  std::string property;
  double statistic = 0.0;
  std::string comparator;  // "<=", ">=", "==", or "advisory"
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

/// Runs every property check of the selected suite on the built-in graphs.
/// Failures are reported in the outcomes, never thrown.
std::vector<PropertyOutcome> run_verification(const VerifyOptions& options);

}  // namespace frogwild

#endif  // FROGWILD_VERIFY_HPP
